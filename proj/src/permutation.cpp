#include "chirality_lab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

Permutation::Permutation(std::vector<Dart> images) : images_(std::move(images)) {
  if (images_.empty()) throw ValidationError("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Dart d : images_) {
    if (d >= images_.size() || seen[d])
      throw ValidationError("permutation images are not a bijection");
    seen[d] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Dart> images(degree);
  std::iota(images.begin(), images.end(), Dart{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Dart> inv(images_.size());
  for (Dart d = 0; d < images_.size(); ++d) inv[images_[d]] = d;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(std::int64_t exponent) const {
  const auto n = static_cast<std::int64_t>(order());
  std::int64_t e = ((exponent % n) + n) % n;
  std::vector<Dart> out(images_.size());
  // Walk each cycle once instead of repeated composition.
  for (const auto& cycle : cycles()) {
    const auto len = static_cast<std::int64_t>(cycle.size());
    for (std::int64_t i = 0; i < len; ++i) out[cycle[i]] = cycle[(i + e) % len];
  }
  for (Dart d = 0; d < images_.size(); ++d)
    if (images_[d] == d) out[d] = d;
  return Permutation(std::move(out));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Dart start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Dart d = start; !seen[d]; d = images_[d]) {
      seen[d] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (Dart d = 0; d < images_.size(); ++d)
    if (images_[d] != d) return false;
  return true;
}

std::vector<std::vector<Dart>> Permutation::cycles() const {
  std::vector<std::vector<Dart>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Dart start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Dart> cycle;
    for (Dart d = start; !seen[d]; d = images_[d]) {
      seen[d] = true;
      cycle.push_back(d);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw ValidationError("permutation degree mismatch");
  std::vector<Dart> out(p.degree());
  for (Dart d = 0; d < p.degree(); ++d) out[d] = q(p(d));
  return Permutation(std::move(out));
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ValidationError("permutation degree must be at least 1");
  std::vector<Dart> images(degree);
  std::iota(images.begin(), images.end(), Dart{0});
  std::vector<bool> used(degree, false);

  auto skip_space = [&](std::size_t& i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };

  std::size_t i = 0;
  skip_space(i);
  if (i == text.size()) throw ValidationError("empty permutation text");
  bool identity_token = false;
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw ValidationError("malformed permutation: expected '(' at column " + std::to_string(i + 1));
    ++i;
    skip_space(i);
    if (i < text.size() && text[i] == ')') {
      // "()" is only valid as the whole identity.
      identity_token = true;
      ++i;
      skip_space(i);
      continue;
    }
    std::vector<Dart> cycle;
    while (true) {
      skip_space(i);
      if (i >= text.size()) throw ValidationError("malformed permutation: unclosed '('");
      if (text[i] == ')') {
        ++i;
        break;
      }
      unsigned long label = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), label);
      if (ec != std::errc{} || ptr == text.data() + i)
        throw ValidationError("malformed permutation: bad label at column " + std::to_string(i + 1));
      i = static_cast<std::size_t>(ptr - text.data());
      if (label < 1 || label > degree)
        throw ValidationError("permutation label " + std::to_string(label) + " out of range 1.." +
                              std::to_string(degree));
      const Dart d = static_cast<Dart>(label - 1);
      if (used[d]) throw ValidationError("duplicate permutation label " + std::to_string(label));
      used[d] = true;
      cycle.push_back(d);
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space(i);
  }
  if (identity_token && any_cycle) throw ValidationError("malformed permutation: '()' mixed with cycles");
  return Permutation(std::move(images));
}

std::string format_permutation(const Permutation& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k] + 1;
    }
    out << ')';
  }
  return out.str();
}

bool is_transitive_pair(const Permutation& r, const Permutation& l) {
  if (r.degree() != l.degree()) throw ValidationError("permutation degree mismatch");
  const std::size_t n = r.degree();
  std::vector<bool> seen(n, false);
  std::vector<Dart> queue{0};
  seen[0] = true;
  // Forward images suffice: orbits of a finite permutation group are closed
  // under the generators alone.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Dart next : {r(queue[head]), l(queue[head])}) {
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == n;
}

}  // namespace chirality_lab
