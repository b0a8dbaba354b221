#pragma once

#include <cstdint>

namespace chirality_lab {

/// Caps on the expensive searches. Nothing raises these implicitly.
struct Budgets {
  std::uint64_t group = std::uint64_t{1} << 22;    // elements per enumerated group
  std::uint64_t pairs = std::uint64_t{1} << 26;    // elements of a pair group
  std::uint64_t scan = 10'000'000;                 // generating-pair checks
  std::uint64_t simplicity = 10'000;               // |G| for is_simple
  std::uint64_t isomorphism = 10'000;              // |A|, |B| for are_isomorphic
  std::uint64_t cover = std::uint64_t{1} << 23;    // darts of a materialized cover/join
};

/// Default budgets with the `CHIRALITY_LAB_BUDGET_PAIRS` override applied.
Budgets budgets_from_environment();

}  // namespace chirality_lab
