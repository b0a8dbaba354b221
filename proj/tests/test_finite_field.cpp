#include <doctest.h>

#include "chirality_lab/error.hpp"
#include "chirality_lab/finite_field.hpp"
#include "oracles.hpp"

using namespace chirality_lab;

TEST_CASE("least irreducible moduli") {
  CHECK(make_field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
  CHECK(make_field(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});     // x^2 + 1
  CHECK(make_field(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(make_field(7, 1)->order() == 7);
}

TEST_CASE("bad fields") {
  CHECK_THROWS_AS(make_field(4, 1), ValidationError);
  CHECK_THROWS_AS(make_field(2, 21), ValidationError);
  CHECK_THROWS_AS(prime_power(12), ValidationError);
  CHECK_THROWS_AS(prime_power(1), ValidationError);
  CHECK(prime_power(81) == std::pair<std::uint32_t, std::uint32_t>{3, 4});
  CHECK_THROWS(make_field(5, 1)->inv(0));
}

TEST_CASE("formatting") {
  auto f = make_field(2, 3);
  CHECK(f->format(6) == "[0,1,1]");
  CHECK(make_field(7, 1)->format(5) == "5");
  CHECK(f->from_coefficients({0, 1, 1}) == 6);
}

TEST_CASE("generators") {
  CHECK(find_generator(make_field(5, 1)).code() == 2);
  CHECK(find_generator(make_field(2, 2)).code() == 2);
  CHECK(find_generator(make_field(7, 1)).code() == 3);
  CHECK(find_generator(make_field(2, 1)).code() == 1);
}

TEST_CASE("GF(2^e) multiplication agrees with carry-less arithmetic") {
  for (std::uint32_t e = 2; e <= 6; ++e) {
    auto f = make_field(2, e);
    std::uint32_t mask = 0;
    for (std::uint32_t i = 0; i <= e; ++i) mask |= f->modulus()[i] << i;
    for (std::uint32_t a = 0; a < f->order(); ++a)
      for (std::uint32_t b = 0; b < f->order(); ++b) {
        REQUIRE(f->mul(a, b) == oracle::gf2_mul(a, b, mask, static_cast<int>(e)));
        REQUIRE(f->add(a, b) == (a ^ b));
      }
  }
}

TEST_CASE("prime fields agree with modular arithmetic") {
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    auto f = make_field(p, 1);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f->add(a, b) == (a + b) % p);
        CHECK(f->mul(a, b) == a * b % p);
        CHECK(f->sub(a, b) == (a + p - b) % p);
      }
  }
}

TEST_CASE("property: field axioms for every small field") {
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 49u}) {
    const auto [p, e] = prime_power(q);
    auto f = make_field(p, e);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK((q - 1) % f->multiplicative_order(a) == 0);
        CHECK(f->pow(a, static_cast<std::int64_t>(q - 1)) == 1);
      }
      for (std::uint32_t b = 0; b < q; b += 3) {
        CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
        for (std::uint32_t c = 0; c < q; c += 5) {
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        }
      }
    }
    CHECK(find_generator(f).multiplicative_order() == q - 1);
  }
}

TEST_CASE("FieldElement refuses mixed fields") {
  auto f = make_field(2, 3), g = make_field(2, 3);
  FieldElement a(f, 3), b(g, 5);
  CHECK_THROWS(a + b);
  CHECK((a * FieldElement(f, 1)) == a);
  CHECK((a / a).code() == 1);
  CHECK((-a + a).is_zero());
}
