#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace chirality_lab {

class GaloisField;
using FieldRef = std::shared_ptr<const GaloisField>;

/// GF(p^e) in a polynomial basis.
///
/// Elements are encoded as `code = c0 + c1 p + ... + c_{e-1} p^{e-1}`, which is
/// canonical, so equality and hashing are structural. "Lexicographic" order on
/// coefficient vectors in this module means numeric order of the code (the
/// top-degree coefficient is most significant).
class GaloisField {
 public:
  using Code = std::uint32_t;

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Monic reduction polynomial, constant term first (length e + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::vector<std::uint32_t> coefficients(Code a) const;
  Code from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws on zero
  Code div(Code a, Code b) const;
  Code pow(Code a, std::int64_t exponent) const;
  Code frobenius(Code a) const { return pow(a, p_); }
  std::uint64_t multiplicative_order(Code a) const;  // throws on zero

  std::string format(Code a) const;

 private:
  friend FieldRef make_field(std::uint32_t p, std::uint32_t e);
  GaloisField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
};

/// Builds GF(p^e) with the least monic irreducible reduction polynomial.
/// Requires p prime and p^e <= 2^20; throws ValidationError otherwise.
FieldRef make_field(std::uint32_t p, std::uint32_t e);

/// Splits q into (p, e) with q = p^e; throws ValidationError if q is not a
/// prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Value type pairing a field with an element code.
class FieldElement {
 public:
  FieldElement(FieldRef field, GaloisField::Code code);

  const FieldRef& field() const noexcept { return field_; }
  GaloisField::Code code() const noexcept { return code_; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t exponent) const;
  FieldElement frobenius() const;
  std::uint64_t multiplicative_order() const;
  bool is_zero() const noexcept { return code_ == 0; }

  std::string to_string() const { return field_->format(code_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  void require_same_field(const FieldElement& b) const;

  FieldRef field_;
  GaloisField::Code code_;
};

/// First element in code order with multiplicative order q - 1.
FieldElement find_generator(const FieldRef& field);

}  // namespace chirality_lab
