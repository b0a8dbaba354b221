#include <doctest.h>

#include "chirality_lab/catalog.hpp"
#include "chirality_lab/chirality.hpp"
#include "chirality_lab/error.hpp"
#include "chirality_lab/lattice.hpp"
#include "oracles.hpp"

using namespace chirality_lab;

namespace {

Hypermap build(const char* spec) { return build_hypermap(FamilySpec::parse(spec)).hypermap; }

oracle::Perm as_oracle(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::vector<Hypermap> cyclic_family(std::int64_t p) {
  std::vector<Hypermap> maps{cyclic_hypermap(p, 1, 0), cyclic_hypermap(p, 0, 1)};
  for (std::int64_t j = 1; j < p; ++j) maps.push_back(cyclic_hypermap(p, 1, j));
  return maps;
}

}  // namespace

TEST_CASE("orthogonal cyclic hypermaps") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto maps = cyclic_family(p);
    REQUIRE(maps.size() == static_cast<std::size_t>(p + 1));
    for (std::size_t a = 0; a < maps.size(); ++a)
      for (std::size_t b = 0; b < maps.size(); ++b) {
        const bool expect = a != b;
        CHECK(is_orthogonal(maps[a], maps[b]) == expect);
        CHECK(oracle::product_transitive(as_oracle(maps[a].r()), as_oracle(maps[a].l()), as_oracle(maps[b].r()),
                                         as_oracle(maps[b].l())) == expect);
        CHECK((meet(maps[a], maps[b]).darts() == 1) == expect);
      }
  }
  const auto both = join(cyclic_hypermap(5, 1, 0), cyclic_hypermap(5, 0, 1));
  CHECK(both.darts() == 25);
  CHECK(abelian_invariants(SubgroupElements::whole(both.monodromy())).invariants ==
        std::vector<std::uint64_t>{5, 5});
}

TEST_CASE("A7 is orthogonal to its mirror") {
  const auto h = alternating_map(7);
  CHECK(is_orthogonal(h, h.mirror()));
  CHECK_FALSE(is_orthogonal(h, h));
}

TEST_CASE("join and meet with itself") {
  for (const char* spec : {"agl1:q=5", "metacyclic:n=7,m=3,r=2", "alt:n=5"}) {
    const auto h = build(spec);
    CHECK(is_isomorphic_hypermap(join(h, h), h));
    CHECK(is_isomorphic_hypermap(meet(h, h), h));
  }
}

TEST_CASE("mirror joins and meets") {
  for (const char* spec : {"agl1:q=5", "agl1:q=8", "metacyclic:n=9,m=3,r=4", "agammal1:q=8", "dihedral:n=4"}) {
    CAPTURE(spec);
    const auto h = build(spec);
    CHECK(is_isomorphic_hypermap(join(h, h.mirror()), smallest_reflexible_cover(h)));
    CHECK(is_isomorphic_hypermap(meet(h, h.mirror()), largest_reflexible_quotient(h)));
  }
}

TEST_CASE("property: Goursat bookkeeping and covering laws") {
  const std::vector<const char*> specs{"agl1:q=5", "agl1:q=4",   "metacyclic:n=7,m=3,r=2", "metacyclic:n=5,m=4,r=2",
                                       "dihedral:n=6", "cyclic:p=6,i=1,j=0", "symmetric:n=4", "alt:n=5"};
  for (const char* sa : specs)
    for (const char* sb : specs) {
      CAPTURE(sa);
      CAPTURE(sb);
      const auto h = build(sa), k = build(sb);
      const auto j = join(h, k), m = meet(h, k);
      CHECK(j.darts() * m.darts() == h.darts() * k.darts());
      CHECK(covers(j, h));
      CHECK(covers(j, k));
      CHECK(covers(h, m));
      CHECK(covers(k, m));
      CHECK(is_isomorphic_hypermap(m, meet_from_second(h, k)));
      const bool orthogonal = is_orthogonal(h, k);
      CHECK(orthogonal == (m.darts() == 1));
      CHECK(orthogonal == (j.darts() == h.darts() * k.darts()));
    }
}

TEST_CASE("join is associative on cyclic triples") {
  const auto maps = cyclic_family(3);
  for (const auto& a : maps)
    for (const auto& b : maps)
      for (const auto& c : maps) {
        const auto left = join(join(a, b), c), right = join(a, join(b, c));
        CHECK(is_isomorphic_hypermap(left, right));
        CHECK(is_isomorphic_hypermap(join_all({a, b, c}), left));
      }
  CHECK_THROWS_AS(join_all({}), ValidationError);
}

TEST_CASE("factor proposition on degenerate instances") {
  const auto k = alternating_map(5);
  // A5 is reflexible, so it is not totally chiral
  CHECK_FALSE(verify_factor_proposition(k, trivial_hypermap()).preconditions_met);

  const auto a7 = alternating_map(7);
  const auto full = verify_factor_proposition(a7, trivial_hypermap());
  CHECK(full.preconditions_met);
  CHECK(full.kernel_order == 2520);
  CHECK(full.chirality_order == 2520);
  CHECK(full.isomorphic);

  const auto same = verify_factor_proposition(a7, a7);
  CHECK(same.preconditions_met);
  CHECK(same.kernel_order == 1);
  CHECK(same.chirality_order == 1);
  CHECK(same.isomorphic);

  const auto wrong = verify_factor_proposition(trivial_hypermap(), a7);
  CHECK_FALSE(wrong.preconditions_met);
  CHECK(wrong.failed_precondition == "K does not cover H");
}
