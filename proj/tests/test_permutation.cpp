#include <doctest.h>

#include <random>

#include "chirality_lab/error.hpp"
#include "chirality_lab/permutation.hpp"
#include "oracles.hpp"

using namespace chirality_lab;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Dart> images(n);
  std::iota(images.begin(), images.end(), Dart{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

oracle::Perm as_oracle(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST_CASE("compose applies the left factor first") {
  const auto p = parse_permutation("(1 2)", 3);
  const auto q = parse_permutation("(2 3)", 3);
  CHECK(format_permutation(compose(p, q)) == "(1 3 2)");
  CHECK(format_permutation(compose(q, p)) == "(1 2 3)");
}

TEST_CASE("parse and format") {
  CHECK(format_permutation(parse_permutation("()", 4)) == "()");
  CHECK(parse_permutation("()", 4).is_identity());
  CHECK(format_permutation(parse_permutation("(3 1 2)", 3)) == "(1 2 3)");
  CHECK(format_permutation(parse_permutation("(4 5)(1 2)", 5)) == "(1 2)(4 5)");
  CHECK(format_permutation(parse_permutation("(2)(1 3)", 3)) == "(1 3)");
  CHECK(parse_permutation("(1 2 3 4 5 6 7)", 7).order() == 7);
  CHECK(parse_permutation("(1 2)(3 4 5)", 5).order() == 6);
}

TEST_CASE("malformed cycle text is rejected") {
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(1 4)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(1 x)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("()(1 2)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("1 2", 3), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 0}), ValidationError);
  CHECK_THROWS_AS(Permutation({}), ValidationError);
}

TEST_CASE("cycles start at their least dart and are sorted") {
  const auto p = parse_permutation("(5 3)(4 2 6)", 7);
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<Dart>{1, 5, 3});
  CHECK(cycles[1] == std::vector<Dart>{2, 4});
}

TEST_CASE("transitivity") {
  CHECK(is_transitive_pair(parse_permutation("(1 2 3)", 4), parse_permutation("(3 4)", 4)));
  CHECK_FALSE(is_transitive_pair(parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)));
  CHECK(is_transitive_pair(Permutation::identity(1), Permutation::identity(1)));
}

TEST_CASE("property: group laws against the oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto p = random_permutation(n, rng), q = random_permutation(n, rng), r = random_permutation(n, rng);
    CHECK(as_oracle(compose(p, q)) == oracle::mul(as_oracle(p), as_oracle(q)));
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(p.order() == oracle::order(as_oracle(p)));
    CHECK(p.pow(static_cast<std::int64_t>(p.order())).is_identity());
    CHECK(p.pow(-1) == p.inverse());
    CHECK(p.pow(5) == compose(p.pow(2), p.pow(3)));
    CHECK(parse_permutation(format_permutation(p), n) == p);
  }
}
