#include "chirality_lab/budgets.hpp"

#include <cstdlib>
#include <string>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

Budgets budgets_from_environment() {
  Budgets b;
  if (const char* text = std::getenv("CHIRALITY_LAB_BUDGET_PAIRS"); text && *text) {
    try {
      std::size_t used = 0;
      b.pairs = std::stoull(text, &used);
      if (used != std::string(text).size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw ValidationError(std::string("CHIRALITY_LAB_BUDGET_PAIRS is not an integer: ") + text);
    }
  }
  return b;
}

}  // namespace chirality_lab
