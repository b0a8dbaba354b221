#include <doctest.h>

#include "chirality_lab/catalog.hpp"
#include "chirality_lab/chirality.hpp"
#include "chirality_lab/error.hpp"
#include "oracles.hpp"

using namespace chirality_lab;

namespace {

Hypermap build(const char* spec) { return build_hypermap(FamilySpec::parse(spec)).hypermap; }

oracle::Perm as_oracle(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// X as dart labels: for a regular hypermap, element g is identified with the
// dart it sends dart 0 to.
std::set<std::size_t> oracle_x(const Hypermap& h) {
  const auto g = oracle::generate({as_oracle(h.r()), as_oracle(h.l())});
  std::set<std::size_t> out;
  for (std::size_t x : oracle::minimal_inverting_normal_subgroup(g)) out.insert(g.elems[x][0]);
  return out;
}

}  // namespace

TEST_CASE("metacyclic(7,3,2,0)") {
  const auto h = build("metacyclic:n=7,m=3,r=2,s=0");
  const auto x = chirality_group(h);
  CHECK(x.kappa == 7);
  CHECK(x.x.size() == 7);
  CHECK(x.x.is_normal());
  // X = <a^3>, read off the dart action of R from dart 0
  std::set<Index> powers;
  Dart d = 0;
  for (int i = 0; i < 7; ++i) {
    powers.insert(d);
    d = h.r().pow(3)(d);
  }
  CHECK(std::set<Index>(x.x.members().begin(), x.x.members().end()) == powers);
}

TEST_CASE("affine hypermaps") {
  for (std::uint64_t q : {5u, 7u, 8u, 9u}) {
    const auto x = chirality_group(agl1(q));
    CHECK(x.kappa == q);
    const auto structure = abelian_invariants(x.x);
    CHECK(structure.abelian);
    const auto [p, e] = prime_power(q);
    CHECK(structure.invariants == std::vector<std::uint64_t>(e, p));
  }
  CHECK(chirality_group(agl1(4)).kappa == 1);
}

TEST_CASE("A7 is totally chiral") {
  const auto h = alternating_map(7);
  const auto report = chirality_report(h);
  CHECK(report.darts == 2520);
  REQUIRE(report.kappa);
  CHECK(*report.kappa == 2520);
  CHECK(report.totally_chiral);
  CHECK(report.monodromy_perfect);
  CHECK_FALSE(report.reflexible);
  const auto quotient = largest_reflexible_quotient(h);
  CHECK(quotient.darts() == 1);
  CHECK(quotient.type() == HypermapType{1, 1, 1});
}

TEST_CASE("semilinear hypermap over F_8") {
  const auto report = chirality_report(agamma_l1(8));
  CHECK(report.monodromy_order == 168);
  CHECK(report.kappa == 56);
  CHECK_FALSE(report.totally_chiral);
  CHECK_FALSE(report.reflexible);
}

TEST_CASE("reflexible cover and quotient of AGL1(5)") {
  const auto h = agl1(5);
  const auto cover = smallest_reflexible_cover(h);
  CHECK(cover.darts() == 100);
  CHECK(cover.type() == h.type());
  CHECK(is_smooth_covering(cover, h));
  CHECK(is_reflexible(cover));
  const auto chi = h.euler_characteristic();
  CHECK(cover.euler_characteristic() == Rational::make(5 * chi.num, chi.den));
  const auto quotient = largest_reflexible_quotient(h);
  CHECK(quotient.darts() == 4);
  CHECK(is_reflexible(quotient));
  CHECK(abelian_invariants(SubgroupElements::whole(quotient.monodromy())).invariants ==
        std::vector<std::uint64_t>{4});
}

TEST_CASE("reflexible input: cover and quotient are the map itself") {
  const auto h = build("dihedral:n=6");
  CHECK(is_reflexible(h));
  CHECK(is_isomorphic_hypermap(smallest_reflexible_cover(h), h));
  CHECK(is_isomorphic_hypermap(largest_reflexible_quotient(h), h));
  CHECK(mirror_automorphism_exists(h));
  CHECK_FALSE(is_totally_chiral(h));
}

TEST_CASE("non-regular input is refused") {
  const auto h = Hypermap::make(parse_permutation("(1 2 3)", 3), parse_permutation("(1 2)", 3));
  CHECK_THROWS_AS(chirality_group(h), ValidationError);
  CHECK_THROWS_AS(chirality_report(h), ValidationError);
}

TEST_CASE("budget exhaustion is a lower bound, not an error") {
  Budgets budgets;
  budgets.pairs = 100'000;
  const auto report = chirality_report(alternating_map(7), budgets);
  CHECK(report.budget_exceeded);
  CHECK_FALSE(report.kappa);
  CHECK(report.kappa_lower_bound >= 100'000 / 2520);
  CHECK(report.kappa_lower_bound <= 2520);
  CHECK_THROWS_AS(chirality_group(alternating_map(7), budgets), BudgetExceeded);
}

TEST_CASE("pair search agrees with the minimal normal subgroup oracle") {
  for (const char* spec : {"metacyclic:n=7,m=3,r=2", "metacyclic:n=9,m=3,r=4", "metacyclic:n=16,m=4,r=3",
                           "metacyclic:n=9,m=3,r=4,s=3", "agl1:q=5", "agl1:q=8", "agl1:q=4", "alt:n=5",
                           "dihedral:n=5", "cyclic:p=7,i=1,j=3"}) {
    CAPTURE(spec);
    const auto h = build(spec);
    const auto x = chirality_group(h);
    CHECK(std::set<std::size_t>(x.x.members().begin(), x.x.members().end()) == oracle_x(h));
  }
}

TEST_CASE("property: universal invariants") {
  for (const char* spec : {"metacyclic:n=13,m=4,r=5", "metacyclic:n=21,m=3,r=4", "agl1:q=9", "agl1:q=7",
                           "agammal1:q=8", "agammal1:q=4", "psl2:q=7", "cyclic:p=12,i=1,j=5"}) {
    CAPTURE(spec);
    const auto h = build(spec);
    const auto x = chirality_group(h);
    CHECK(h.darts() % x.kappa == 0);
    CHECK(x.x.is_normal());
    CHECK(chirality_group(h.mirror()).kappa == x.kappa);
    CHECK((x.kappa == 1) == is_isomorphic_hypermap(h, h.mirror()));
    CHECK((x.kappa == 1) == mirror_automorphism_exists(h));
    const auto cover = smallest_reflexible_cover(h);
    CHECK(cover.darts() == x.kappa * h.darts());
    CHECK(chirality_group(cover).kappa == 1);
    CHECK(is_smooth_covering(cover, h));
    CHECK(is_reflexible(largest_reflexible_quotient(h)));
  }
}
