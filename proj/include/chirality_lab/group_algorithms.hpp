#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chirality_lab/cayley_table.hpp"

namespace chirality_lab {

/// Images in H of the canonical generators R and L of G.
struct GeneratorTargets {
  Index r;
  Index l;
};

/// Targets (R^-1, L^-1) inside the same table: the mirror assignment.
GeneratorTargets inverted_generators(const CayleyTable& g);
/// Targets (R, L) of H: the assignment between canonical generators.
GeneratorTargets canonical_generators(const CayleyTable& h);

struct PairGroupOptions {
  std::uint64_t budget = std::uint64_t{1} << 26;  // cap on |P|
  bool build_table = false;
};

struct PairGroup {
  std::uint64_t order = 0;
  /// {a : (a, 1) in P}, a normal subgroup of G.
  SubgroupElements first_kernel;
  /// {b : (1, b) in P}, a normal subgroup of <targets> in H.
  SubgroupElements second_kernel;
  /// Cayley table of P on its generators (R, t_r), (L, t_l), when requested.
  TablePtr table;
};

/// BFS over pairs (a, b) from (1, 1) under (R, t_r), (L, t_l) and inverses.
/// Throws BudgetExceeded (with the pairs reached) when |P| passes the budget.
PairGroup pair_group(const TablePtr& g, const TablePtr& h, GeneratorTargets targets,
                     const PairGroupOptions& options = {});

/// The homomorphism G -> H sending R, L to the targets, if one exists. Built by
/// propagating images along the Cayley graph and checking every edge; this
/// agrees with "every pair (1, b) in P has b = 1" for the pair group P.
std::optional<std::vector<Index>> extend_homomorphism(const CayleyTable& g, const CayleyTable& h,
                                                      GeneratorTargets targets);
bool hom_extends(const CayleyTable& g, const CayleyTable& h, GeneratorTargets targets);

/// Subgroup generated by `gens`.
SubgroupElements subgroup_closure(const TablePtr& g, const std::vector<Index>& gens);
/// Smallest normal subgroup containing `seeds`.
SubgroupElements normal_closure(const TablePtr& g, const std::vector<Index>& seeds);

struct Quotient {
  TablePtr table;                     // G/N with the induced canonical generators
  std::vector<Index> projection;      // element of G -> coset index
  std::vector<Index> representatives; // coset index -> least element of the coset
};

/// Throws ValidationError unless N is normal in its parent.
Quotient quotient_group(const SubgroupElements& n);

/// Normal closure of [R, L], which is G' for a 2-generated group.
SubgroupElements derived_subgroup(const TablePtr& g);
bool is_perfect(const TablePtr& g);

/// Abelian invariants d_1 | d_2 | ... (product |N|), or "nonabelian".
struct GroupStructure {
  bool abelian = true;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> invariants;

  /// "2.2.2", "1" for trivial, "nonabelian:<order>" otherwise.
  std::string compact() const;
  /// "C2 x C2 x C2", "1", "nonabelian of order 168".
  std::string describe() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};
GroupStructure abelian_invariants(const SubgroupElements& n);

/// Orbits of conjugation by R and L, as sorted member lists; identity first.
std::vector<std::vector<Index>> conjugacy_classes(const CayleyTable& g);

/// Every non-identity conjugacy class normally generates G. Throws
/// BudgetExceeded when |G| exceeds the budget.
bool is_simple(const TablePtr& g, std::uint64_t budget = 10'000);

/// Element order -> count.
std::map<std::uint64_t, std::uint64_t> order_histogram(const SubgroupElements& n);

/// Bounded backtracking isomorphism test between two finite groups given as
/// subgroups of (possibly different) tables.
bool are_isomorphic(const SubgroupElements& a, const SubgroupElements& b, std::uint64_t budget = 10'000);

}  // namespace chirality_lab
