#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "chirality_lab/permutation.hpp"

namespace chirality_lab {

/// Canonical generator slots. `R` and `L` are the two canonical generators;
/// the inverse slots sit two apart so `inverse_of(g) == g ^ 2`.
enum class Gen : std::uint8_t { R = 0, L = 1, RInv = 2, LInv = 3 };
inline constexpr std::size_t kGenCount = 4;
inline constexpr std::array<Gen, kGenCount> kGens{Gen::R, Gen::L, Gen::RInv, Gen::LInv};
constexpr Gen inverse_of(Gen g) { return static_cast<Gen>(static_cast<std::uint8_t>(g) ^ 2u); }
constexpr std::size_t slot(Gen g) { return static_cast<std::size_t>(g); }

/// A finite 2-generated group as its right Cayley graph.
///
/// Element 0 is the identity. Indices are assigned by FIFO breadth-first search
/// from the identity trying generators in the order R, L, R^-1, L^-1, so two
/// faithful representations of the same generated group yield identical
/// tables. `succ(g)[x]` is the index of `x * g`.
class CayleyTable {
 public:
  using Index = std::uint32_t;
  static constexpr Index kNone = ~Index{0};

  /// Relabels arbitrary successor arrays into canonical BFS order. Throws
  /// ValidationError unless each generator/inverse pair is a mutually inverse
  /// bijection and every element is reachable from `start`.
  /// `relabel`, when given, receives old index -> new index.
  static CayleyTable from_successors(std::array<std::vector<Index>, kGenCount> succ, Index start = 0,
                                     std::vector<Index>* relabel = nullptr);

  std::size_t size() const noexcept { return succ_[0].size(); }
  static constexpr Index identity() noexcept { return 0; }

  std::span<const Index> succ(Gen g) const noexcept { return succ_[slot(g)]; }
  Index step(Index x, Gen g) const noexcept { return succ_[slot(g)][x]; }
  Index generator(Gen g) const noexcept { return succ_[slot(g)][0]; }

  /// BFS tree: `x == parent(x) * parent_gen(x)` for x != 0.
  Index parent(Index x) const noexcept { return parent_[x]; }
  Gen parent_gen(Index x) const noexcept { return parent_gen_[x]; }
  std::size_t depth(Index x) const;

  /// Shortest word in the canonical generators, left to right.
  std::vector<Gen> word(Index x) const;

  Index multiply(Index a, Index b) const;
  Index inverse(Index x) const;
  /// `g^-1 x g` for a canonical generator g.
  Index conjugate(Index x, Gen g) const;
  /// `x^-1 y^-1 x y`.
  Index commutator(Index x, Index y) const;
  Index power(Index x, std::int64_t n) const;
  std::uint64_t element_order(Index x) const;

  /// `y -> y * h` for every y.
  std::vector<Index> right_multiplication_map(Index h) const;
  /// `y -> g * y` for a canonical generator g.
  std::span<const Index> left_multiplication(Gen g) const;

  /// Right-multiplication by R and L as permutations of the elements: the
  /// right regular representation, which is the monodromy of the
  /// orientably regular hypermap on this group.
  Permutation regular_permutation(Gen g) const;

 private:
  CayleyTable() = default;

  struct Derived {
    std::once_flag once;
    std::array<std::vector<Index>, kGenCount> left;
    std::vector<Index> inverse;
  };
  const Derived& derived() const;

  std::array<std::vector<Index>, kGenCount> succ_;
  std::vector<Index> parent_;
  std::vector<Gen> parent_gen_;
  std::shared_ptr<Derived> derived_ = std::make_shared<Derived>();
};

using TablePtr = std::shared_ptr<const CayleyTable>;
using Index = CayleyTable::Index;

/// Enumerates <x, y> from a faithful action on points 0..degree-1. Elements
/// are stored as image vectors; `budget` caps the group order and throws
/// BudgetExceeded with the partial count.
TablePtr enumerate_group(const Permutation& x, const Permutation& y, std::uint64_t budget = std::uint64_t{1} << 22);

/// A subgroup of a CayleyTable held as its sorted element indices.
class SubgroupElements {
 public:
  SubgroupElements(TablePtr parent, std::vector<Index> members, std::vector<Index> generators = {});

  static SubgroupElements whole(const TablePtr& parent);
  static SubgroupElements trivial(const TablePtr& parent);

  const TablePtr& parent() const noexcept { return parent_; }
  const std::vector<Index>& members() const noexcept { return members_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Index x) const;
  /// Position of x in `members()`, or kNone.
  Index position(Index x) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->size(); }

  /// Closed under conjugation by R and L.
  bool is_normal() const;
  /// True iff every product of two generators stays inside (closure spot check).
  bool closure_spot_check() const;

  friend bool operator==(const SubgroupElements& a, const SubgroupElements& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  TablePtr parent_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
};

}  // namespace chirality_lab
