#include "chirality_lab/cayley_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

CayleyTable CayleyTable::from_successors(std::array<std::vector<Index>, kGenCount> succ, Index start,
                                         std::vector<Index>* relabel) {
  const std::size_t n = succ[0].size();
  if (n == 0) throw ValidationError("empty successor table");
  for (const auto& s : succ)
    if (s.size() != n) throw ValidationError("successor arrays differ in length");
  for (Gen g : kGens) {
    const auto& fwd = succ[slot(g)];
    const auto& back = succ[slot(inverse_of(g))];
    for (std::size_t x = 0; x < n; ++x)
      if (fwd[x] >= n || back[fwd[x]] != x) throw ValidationError("successor arrays are not mutually inverse");
  }

  std::vector<Index> order;
  order.reserve(n);
  std::vector<Index> label(n, kNone);
  CayleyTable table;
  table.parent_.assign(n, 0);
  table.parent_gen_.assign(n, Gen::R);
  label[start] = 0;
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Index old = order[head];
    for (Gen g : kGens) {
      const Index next = succ[slot(g)][old];
      if (label[next] == kNone) {
        label[next] = static_cast<Index>(order.size());
        table.parent_[order.size()] = static_cast<Index>(head);
        table.parent_gen_[order.size()] = g;
        order.push_back(next);
      }
    }
  }
  if (order.size() != n)
    throw ValidationError("successor table is disconnected: reached " + std::to_string(order.size()) + " of " +
                          std::to_string(n));

  for (Gen g : kGens) {
    auto& out = table.succ_[slot(g)];
    out.resize(n);
    const auto& in = succ[slot(g)];
    for (std::size_t x = 0; x < n; ++x) out[label[x]] = label[in[x]];
  }
  if (relabel) *relabel = std::move(label);
  return table;
}

std::size_t CayleyTable::depth(Index x) const {
  std::size_t d = 0;
  for (; x != 0; x = parent_[x]) ++d;
  return d;
}

std::vector<Gen> CayleyTable::word(Index x) const {
  std::vector<Gen> w;
  for (; x != 0; x = parent_[x]) w.push_back(parent_gen_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

Index CayleyTable::multiply(Index a, Index b) const {
  // a * b = a * g_1 * ... * g_k along b's word; the word is read off the BFS
  // tree backwards, so buffer it first.
  Gen buffer[64];
  std::size_t len = 0;
  std::vector<Gen> spill;
  for (Index y = b; y != 0; y = parent_[y]) {
    if (len < std::size(buffer))
      buffer[len++] = parent_gen_[y];
    else
      spill.push_back(parent_gen_[y]);
  }
  if (!spill.empty()) {
    for (auto it = spill.rbegin(); it != spill.rend(); ++it) a = succ_[slot(*it)][a];
  }
  while (len > 0) a = succ_[slot(buffer[--len])][a];
  return a;
}

const CayleyTable::Derived& CayleyTable::derived() const {
  std::call_once(derived_->once, [this] {
    const std::size_t n = size();
    for (Gen g : kGens) {
      auto& left = derived_->left[slot(g)];
      left.resize(n);
      left[0] = succ_[slot(g)][0];
      // g * (p * h) = (g * p) * h
      for (std::size_t x = 1; x < n; ++x) left[x] = succ_[slot(parent_gen_[x])][left[parent_[x]]];
    }
    auto& inv = derived_->inverse;
    inv.resize(n);
    inv[0] = 0;
    // (p * h)^-1 = h^-1 * p^-1
    for (std::size_t x = 1; x < n; ++x) inv[x] = derived_->left[slot(inverse_of(parent_gen_[x]))][inv[parent_[x]]];
  });
  return *derived_;
}

Index CayleyTable::inverse(Index x) const { return derived().inverse[x]; }

std::span<const Index> CayleyTable::left_multiplication(Gen g) const { return derived().left[slot(g)]; }

Index CayleyTable::conjugate(Index x, Gen g) const {
  return derived().left[slot(inverse_of(g))][succ_[slot(g)][x]];
}

Index CayleyTable::commutator(Index x, Index y) const {
  return multiply(multiply(multiply(inverse(x), inverse(y)), x), y);
}

Index CayleyTable::power(Index x, std::int64_t n) const {
  if (n < 0) {
    x = inverse(x);
    n = -n;
  }
  Index result = 0;
  while (n) {
    if (n & 1) result = multiply(result, x);
    x = multiply(x, x);
    n >>= 1;
  }
  return result;
}

std::uint64_t CayleyTable::element_order(Index x) const {
  std::uint64_t n = 1;
  for (Index y = x; y != 0; y = multiply(y, x)) ++n;
  return n;
}

std::vector<Index> CayleyTable::right_multiplication_map(Index h) const {
  for (Gen g : kGens)
    if (generator(g) == h) return succ_[slot(g)];
  std::vector<Index> out(size());
  std::iota(out.begin(), out.end(), Index{0});
  for (Gen g : word(h)) {
    const auto& s = succ_[slot(g)];
    for (auto& v : out) v = s[v];
  }
  return out;
}

Permutation CayleyTable::regular_permutation(Gen g) const { return Permutation(succ_[slot(g)]); }

namespace {

// Element storage for enumerate_group: image vectors in one flat buffer,
// hashed on a prefix (a short prefix already separates elements of the
// transitive actions used here; equality still compares everything).
struct FlatElements {
  std::size_t degree;
  std::vector<Dart> images;

  const Dart* at(Index i) const { return images.data() + std::size_t{i} * degree; }
};

struct PrefixHash {
  const FlatElements* store;
  std::size_t operator()(Index i) const noexcept {
    const Dart* p = store->at(i);
    const std::size_t len = std::min<std::size_t>(store->degree, 24);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t k = 0; k < len; ++k) {
      h ^= p[k];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct ImagesEqual {
  const FlatElements* store;
  bool operator()(Index a, Index b) const noexcept {
    return std::equal(store->at(a), store->at(a) + store->degree, store->at(b));
  }
};

constexpr std::uint64_t kMaxStoredImages = std::uint64_t{1} << 28;

}  // namespace

TablePtr enumerate_group(const Permutation& x, const Permutation& y, std::uint64_t budget) {
  if (x.degree() != y.degree()) throw ValidationError("generator degree mismatch");
  const std::size_t d = x.degree();
  const std::array<Permutation, kGenCount> gens{x, y, x.inverse(), y.inverse()};

  FlatElements store{d, {}};
  store.images.resize(d);
  std::iota(store.images.begin(), store.images.end(), Dart{0});
  std::unordered_set<Index, PrefixHash, ImagesEqual> seen(1024, PrefixHash{&store}, ImagesEqual{&store});
  seen.insert(0);

  std::array<std::vector<Index>, kGenCount> succ;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (Gen g : kGens) {
      const auto candidate = static_cast<Index>(seen.size());
      if ((std::uint64_t{candidate} + 1) * d > kMaxStoredImages)
        throw BudgetExceeded("group too large to enumerate on " + std::to_string(d) + " points", candidate);
      // The element at `head` acts first, then the generator.
      store.images.resize(store.images.size() + d);
      const Dart* src = store.at(static_cast<Index>(head));
      Dart* dst = store.images.data() + std::size_t{candidate} * d;
      const auto& gen = gens[slot(g)];
      for (std::size_t i = 0; i < d; ++i) dst[i] = gen(src[i]);
      auto [it, inserted] = seen.insert(candidate);
      if (!inserted)
        store.images.resize(store.images.size() - d);
      else if (seen.size() > budget)
        throw BudgetExceeded("group order exceeds budget " + std::to_string(budget), seen.size());
      succ[slot(g)].push_back(*it);
    }
  }
  return std::make_shared<const CayleyTable>(CayleyTable::from_successors(std::move(succ)));
}

SubgroupElements::SubgroupElements(TablePtr parent, std::vector<Index> members, std::vector<Index> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty() || members_.front() != CayleyTable::identity())
    throw std::logic_error("subgroup without the identity");
}

SubgroupElements SubgroupElements::whole(const TablePtr& parent) {
  std::vector<Index> all(parent->size());
  std::iota(all.begin(), all.end(), Index{0});
  return SubgroupElements(parent, std::move(all), {parent->generator(Gen::R), parent->generator(Gen::L)});
}

SubgroupElements SubgroupElements::trivial(const TablePtr& parent) { return SubgroupElements(parent, {0}); }

bool SubgroupElements::contains(Index x) const { return std::binary_search(members_.begin(), members_.end(), x); }

Index SubgroupElements::position(Index x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return CayleyTable::kNone;
  return static_cast<Index>(it - members_.begin());
}

bool SubgroupElements::is_normal() const {
  if (is_whole() || is_trivial()) return true;
  for (Index m : members_)
    for (Gen g : {Gen::R, Gen::L})
      if (!contains(parent_->conjugate(m, g))) return false;
  return true;
}

bool SubgroupElements::closure_spot_check() const {
  std::vector<Index> sample = generators_;
  for (std::size_t i = 0; i < members_.size() && sample.size() < 16; ++i) sample.push_back(members_[i]);
  for (Index a : sample)
    for (Index b : sample)
      if (!contains(parent_->multiply(a, b))) return false;
  return true;
}

}  // namespace chirality_lab
