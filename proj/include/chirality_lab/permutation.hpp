#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chirality_lab {

using Dart = std::uint32_t;

/// A bijection of {0, ..., degree-1}.
///
/// Products use the right-action convention throughout the library: the
/// dart `d` under `compose(p, q)` is `q(p(d))`, i.e. apply `p` first. Text
/// I/O is 1-based cycle notation, storage is 0-based.
class Permutation {
 public:
  /// Validates that `images` is a bijection and non-empty.
  explicit Permutation(std::vector<Dart> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Dart operator()(Dart d) const { return images_[d]; }
  std::span<const Dart> images() const noexcept { return images_; }

  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  bool is_identity() const;

  /// Cycles of length >= 2, each rotated to start at its least dart,
  /// sorted by least dart.
  std::vector<std::vector<Dart>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Dart> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);

/// Parses `"()"` or disjoint cycles of 1-based labels, e.g. `"(1 2)(4 5)"`.
/// Omitted labels are fixed points. Throws ValidationError.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Canonical cycle notation; the identity prints as `"()"`.
std::string format_permutation(const Permutation& p);

/// True iff the orbit of dart 0 under <r, l> is every dart.
bool is_transitive_pair(const Permutation& r, const Permutation& l);

}  // namespace chirality_lab
