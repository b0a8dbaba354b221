#include "chirality_lab/finite_field.hpp"

#include <sstream>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

namespace {

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g (g non-zero), coefficients mod p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inverse_mod_prime(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly f(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return f;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = poly_from_code(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

FieldRef make_field(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw ValidationError("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw ValidationError("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^20");
  }
  Poly modulus;
  for (std::uint64_t low = 0; low < q; ++low) {
    Poly f = poly_from_code(low, p, e);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  return FieldRef(new GaloisField(p, e, std::move(modulus)));
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus)) {}

std::vector<std::uint32_t> GaloisField::coefficients(Code a) const { return poly_from_code(a, p_, e_); }

GaloisField::Code GaloisField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  Poly f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p_;
  f = poly_mod(std::move(f), modulus_, p_);
  Code code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p_ + f[i];
  return code;
}

GaloisField::Code GaloisField::add(Code a, Code b) const {
  Code out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

GaloisField::Code GaloisField::neg(Code a) const {
  Code out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

GaloisField::Code GaloisField::sub(Code a, Code b) const { return add(a, neg(b)); }

GaloisField::Code GaloisField::mul(Code a, Code b) const {
  const Poly fa = coefficients(a), fb = coefficients(b);
  Poly prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (!fa[i]) continue;
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p_);
  }
  return from_coefficients(prod);
}

GaloisField::Code GaloisField::pow(Code a, std::int64_t exponent) const {
  if (exponent < 0) {
    a = inv(a);
    exponent = -exponent;
  }
  Code result = one();
  while (exponent) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

GaloisField::Code GaloisField::inv(Code a) const {
  if (a == 0) throw ValidationError("division by zero in GF(" + std::to_string(q_) + ")");
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

GaloisField::Code GaloisField::div(Code a, Code b) const { return mul(a, inv(b)); }

std::uint64_t GaloisField::multiplicative_order(Code a) const {
  if (a == 0) throw ValidationError("zero has no multiplicative order");
  std::uint64_t n = 1;
  for (Code x = a; x != one(); x = mul(x, a)) ++n;
  return n;
}

std::string GaloisField::format(Code a) const {
  if (e_ == 1) return std::to_string(a);
  std::ostringstream out;
  out << '[';
  const auto c = coefficients(a);
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << ']';
  return out.str();
}

FieldElement::FieldElement(FieldRef field, GaloisField::Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw ValidationError("field element without a field");
  if (code_ >= field_->order()) throw ValidationError("field element code out of range");
}

void FieldElement::require_same_field(const FieldElement& b) const {
  if (field_ != b.field_) throw ValidationError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  require_same_field(b);
  return {field_, field_->add(code_, b.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& b) const {
  require_same_field(b);
  return {field_, field_->sub(code_, b.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::operator*(const FieldElement& b) const {
  require_same_field(b);
  return {field_, field_->mul(code_, b.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& b) const {
  require_same_field(b);
  return {field_, field_->div(code_, b.code_)};
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::int64_t exponent) const { return {field_, field_->pow(code_, exponent)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(code_)}; }
std::uint64_t FieldElement::multiplicative_order() const { return field_->multiplicative_order(code_); }

FieldElement find_generator(const FieldRef& field) {
  for (GaloisField::Code a = 1; a < field->order(); ++a)
    if (field->multiplicative_order(a) == field->order() - 1u) return {field, a};
  throw std::logic_error("multiplicative group of a finite field is not cyclic");
}

}  // namespace chirality_lab
