#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "chirality_lab/cayley_table.hpp"
#include "chirality_lab/permutation.hpp"

namespace chirality_lab {

/// Exact rational with a positive denominator, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// (m, n, k) = orders of RL, R and L.
struct HypermapType {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t k = 1;
  friend bool operator==(const HypermapType&, const HypermapType&) = default;
};

/// An oriented hypermap: darts 0..N-1 with permutations R and L generating a
/// transitive group. Values are immutable; the monodromy table is built on
/// first use and shared between copies.
class Hypermap {
 public:
  /// Throws ValidationError on degree mismatch or an intransitive pair.
  static Hypermap make(Permutation r, Permutation l);

  /// The orientably regular hypermap of a group: darts are the elements,
  /// R and L right-multiply by the canonical generators.
  static Hypermap regular(const TablePtr& table);

  std::size_t darts() const noexcept { return r_.degree(); }
  const Permutation& r() const noexcept { return r_; }
  const Permutation& l() const noexcept { return l_; }

  /// Mon(H) = <R, L>, enumerated from the dart action under `budget`.
  TablePtr monodromy(std::uint64_t budget = std::uint64_t{1} << 22) const;

  HypermapType type() const;
  Rational euler_characteristic() const;
  /// (2 - chi) / 2 when chi is an even integer.
  std::optional<std::int64_t> genus() const;

  /// |Mon(H)| == darts.
  bool is_orientably_regular(std::uint64_t budget = std::uint64_t{1} << 22) const;

  /// (D, R^-1, L^-1).
  Hypermap mirror() const;

  friend bool operator==(const Hypermap& a, const Hypermap& b) { return a.r_ == b.r_ && a.l_ == b.l_; }

 private:
  Hypermap(Permutation r, Permutation l);

  struct Cache {
    std::once_flag once;
    TablePtr table;
  };

  Permutation r_;
  Permutation l_;
  std::shared_ptr<Cache> cache_;
  // Set when the table was supplied at construction, so it may be read
  // without going through the once-flag.
  bool seeded_ = false;
};

/// Throws ValidationError unless H is orientably regular; returns Mon(H).
TablePtr require_regular(const Hypermap& h, std::uint64_t budget = std::uint64_t{1} << 22);

/// Regular hypermaps only: the assignment (R1, L1) -> (R2, L2) extends to an
/// isomorphism of monodromy groups.
bool is_isomorphic_hypermap(const Hypermap& a, const Hypermap& b);

/// Regular hypermaps only: (R1, L1) -> (R2, L2) extends to an epimorphism.
bool covers(const Hypermap& a, const Hypermap& b);

/// A covering between hypermaps of the same type.
bool is_smooth_covering(const Hypermap& a, const Hypermap& b);

/// The regular hypermap on Mon(H)/N. N must be a normal subgroup of the
/// table returned by `h.monodromy()`.
Hypermap quotient_hypermap(const Hypermap& h, const SubgroupElements& n);

}  // namespace chirality_lab
