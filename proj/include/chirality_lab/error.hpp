#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chirality_lab {

/// Bad input: malformed text, violated preconditions, unsupported objects.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search hit its configured cap. `explored()` is the count reached when
/// the search stopped, which is only ever a lower bound on the true size.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t explored)
      : std::runtime_error(what), explored_(explored) {}

  std::uint64_t explored() const noexcept { return explored_; }

 private:
  std::uint64_t explored_;
};

}  // namespace chirality_lab
