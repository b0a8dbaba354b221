#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chirality_lab/budgets.hpp"
#include "chirality_lab/hypermap.hpp"

namespace chirality_lab {

/// The product action of (R1, R2), (L1, L2) on D1 x D2 is transitive.
/// Regular inputs only; throws BudgetExceeded when |D1||D2| > budgets.pairs.
bool is_orthogonal(const Hypermap& h, const Hypermap& k, const Budgets& budgets = {});

/// Least common cover: the regular hypermap of <(R1, R2), (L1, L2)>.
Hypermap join(const Hypermap& h, const Hypermap& k, const Budgets& budgets = {});

/// Left fold of `join`; requires at least one hypermap.
Hypermap join_all(const std::vector<Hypermap>& maps, const Budgets& budgets = {});

/// Greatest common quotient, computed as H / {g : (g, 1) in P}.
Hypermap meet(const Hypermap& h, const Hypermap& k, const Budgets& budgets = {});

/// The same quotient computed from K's side, K / {b : (1, b) in P}.
Hypermap meet_from_second(const Hypermap& h, const Hypermap& k, const Budgets& budgets = {});

/// Outcome of checking X(K v H^r) against the kernel of Mon(K) -> Mon(H) for a
/// totally chiral K covering H.
struct FactorVerdict {
  bool preconditions_met = false;
  std::string failed_precondition;  // empty when met
  std::uint64_t chirality_order = 0;  // |X(L)|
  std::uint64_t kernel_order = 0;     // |ker(Mon(K) -> Mon(H))|
  bool isomorphic = false;
};

FactorVerdict verify_factor_proposition(const Hypermap& k_map, const Hypermap& h_map, const Budgets& budgets = {});

}  // namespace chirality_lab
