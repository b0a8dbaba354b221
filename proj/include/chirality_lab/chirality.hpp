#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "chirality_lab/budgets.hpp"
#include "chirality_lab/group_algorithms.hpp"
#include "chirality_lab/hypermap.hpp"

namespace chirality_lab {

/// X(H) as a subgroup of Mon(H), with kappa = |X|.
///
/// Computed from P = <(R, R^-1), (L, L^-1)> <= Mon(H) x Mon(H): X is
/// {g : (g, 1) in P} and |P| = kappa |Mon(H)|.
struct ChiralityGroup {
  SubgroupElements x;
  std::uint64_t kappa = 1;
  std::uint64_t pair_order = 0;
  /// Cayley table of P, only when requested.
  TablePtr pair_table;
};

/// Throws ValidationError for non-regular H and BudgetExceeded when |P|
/// passes `budgets.pairs`.
ChiralityGroup chirality_group(const Hypermap& h, const Budgets& budgets = {}, bool build_pair_table = false);

/// H_Delta: the regular hypermap of P on its generators (R, R^-1), (L, L^-1).
Hypermap smallest_reflexible_cover(const Hypermap& h, const Budgets& budgets = {});

/// H^Delta = H / X(H).
Hypermap largest_reflexible_quotient(const Hypermap& h, const Budgets& budgets = {});

/// R -> R^-1, L -> L^-1 extends to an automorphism of Mon(H).
bool mirror_automorphism_exists(const Hypermap& h);

bool is_reflexible(const Hypermap& h, const Budgets& budgets = {});
bool is_totally_chiral(const Hypermap& h, const Budgets& budgets = {});

struct ChiralityReport {
  std::uint64_t darts = 0;
  std::uint64_t monodromy_order = 0;
  HypermapType type;
  Rational euler_char;
  std::optional<std::int64_t> genus;
  /// Unset when the pair search hit its budget.
  std::optional<std::uint64_t> kappa;
  /// ceil(pairs reached / |Mon|) when the budget was hit.
  std::uint64_t kappa_lower_bound = 1;
  std::uint64_t pairs_explored = 0;
  std::optional<GroupStructure> x_structure;
  bool reflexible = false;
  bool totally_chiral = false;
  bool monodromy_perfect = false;
  bool budget_exceeded = false;

  struct Timings {
    std::chrono::duration<double> monodromy{};
    std::chrono::duration<double> chirality{};
    std::chrono::duration<double> structure{};
  } timings;
};

/// Everything about a regular hypermap in one pass. Budget exhaustion in the
/// pair search is reported in the result rather than thrown.
ChiralityReport chirality_report(const Hypermap& h, const Budgets& budgets = {});

}  // namespace chirality_lab
