#include <doctest.h>

#include <random>

#include "chirality_lab/catalog.hpp"
#include "chirality_lab/error.hpp"
#include "chirality_lab/group_algorithms.hpp"
#include "chirality_lab/hypermap.hpp"
#include "oracles.hpp"

using namespace chirality_lab;

namespace {

oracle::Perm as_oracle(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// chi = #cycles(R) + #cycles(L) + #cycles(RL) - |D|
Rational chi_by_counting(const Hypermap& h) {
  const auto r = as_oracle(h.r()), l = as_oracle(h.l());
  const auto count = oracle::cycle_count(r) + oracle::cycle_count(l) + oracle::cycle_count(oracle::mul(r, l));
  return Rational::make(static_cast<std::int64_t>(count) - static_cast<std::int64_t>(h.darts()), 1);
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Hypermap::make(parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)), ValidationError);
  CHECK_THROWS_AS(Hypermap::make(Permutation::identity(2), Permutation::identity(3)), ValidationError);
  const auto h = Hypermap::make(parse_permutation("(1 2 3)", 3), parse_permutation("(1 2)", 3));
  CHECK(h.darts() == 3);
  CHECK_FALSE(h.is_orientably_regular());
  CHECK_THROWS_AS(require_regular(h), ValidationError);
}

TEST_CASE("type and Euler characteristic of the trivial hypermap") {
  const auto t = trivial_hypermap();
  CHECK(t.type() == HypermapType{1, 1, 1});
  CHECK(t.euler_characteristic() == Rational{2, 1});
  CHECK(t.genus() == 0);
  CHECK(t.is_orientably_regular());
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational::make(6, -4) == Rational{-3, 2});
  CHECK(Rational::make(0, 5) == Rational{0, 1});
  CHECK(Rational::make(-8, 2).to_string() == "-4");
  CHECK(Rational::make(3, 6).to_string() == "1/2");
}

TEST_CASE("Euler characteristic agrees with cycle counting") {
  for (const char* spec : {"metacyclic:n=7,m=3,r=2", "agl1:q=8", "alt:n=5", "cyclic:p=12,i=1,j=5", "dihedral:n=6",
                           "agammal1:q=8", "psl2:q=7", "metacyclic:n=9,m=3,r=4,s=3"}) {
    const auto h = build_hypermap(FamilySpec::parse(spec)).hypermap;
    CAPTURE(spec);
    CHECK(h.euler_characteristic() == chi_by_counting(h));
    const auto ty = h.type();
    CHECK(ty.n == h.r().order());
    CHECK(ty.k == h.l().order());
    CHECK(ty.m == compose(h.r(), h.l()).order());
  }
  // |D|(1/m + 1/n + 1/k - 1) on a non-regular pair
  const auto h = Hypermap::make(parse_permutation("(1 2 3)", 3), parse_permutation("(1 2)", 3));
  CHECK(h.type() == HypermapType{2, 3, 2});
  CHECK(h.euler_characteristic() == Rational{1, 1});
}

TEST_CASE("mirror") {
  const auto h = build_hypermap(FamilySpec::parse("metacyclic:n=7,m=3,r=2")).hypermap;
  const auto m = h.mirror();
  CHECK(m.r() == h.r().inverse());
  CHECK(m.l() == h.l().inverse());
  CHECK(m.mirror() == h);
  CHECK(m.monodromy()->size() == 21);
  CHECK(m.type() == h.type());
  // the regular mirror is the same map as the mirror of its dart action
  const auto plain = Hypermap::make(h.r(), h.l()).mirror();
  CHECK(is_isomorphic_hypermap(plain, m));
  CHECK_FALSE(is_isomorphic_hypermap(h, m));
}

TEST_CASE("coverings and quotients") {
  const auto a7 = alternating_map(7);
  const auto agl8 = agl1(8);
  CHECK(covers(agl8, agl8));
  CHECK(is_isomorphic_hypermap(agl8, agl8));
  CHECK(covers(agl8, trivial_hypermap()));
  CHECK_FALSE(covers(trivial_hypermap(), agl8));
  const auto g = agl8.monodromy();
  const auto n = normal_closure(g, {g->power(g->generator(Gen::L), 1)});
  const auto q = quotient_hypermap(agl8, n);
  CHECK(q.darts() * n.size() == agl8.darts());
  CHECK(covers(agl8, q));
  CHECK(covers(a7, trivial_hypermap()));
  CHECK_FALSE(is_smooth_covering(a7, trivial_hypermap()));
  CHECK(is_smooth_covering(agl8, agl8));
}

TEST_CASE("property: random transitive pairs") {
  std::mt19937_64 rng(5);
  int regular = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Dart> a(n), b(n);
    std::iota(a.begin(), a.end(), Dart{0});
    std::iota(b.begin(), b.end(), Dart{0});
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation r(a), l(b);
    if (!is_transitive_pair(r, l)) {
      CHECK_THROWS_AS(Hypermap::make(r, l), ValidationError);
      continue;
    }
    const auto h = Hypermap::make(r, l);
    const auto mon = h.monodromy();
    CHECK(mon->size() == oracle::generate({as_oracle(r), as_oracle(l)}).size());
    CHECK(mon->size() % n == 0);
    if (h.is_orientably_regular()) {
      ++regular;
      CHECK(h.euler_characteristic() == chi_by_counting(h));
      CHECK(is_isomorphic_hypermap(h, Hypermap::regular(mon)));
    }
  }
  CHECK(regular > 0);
}
