#include "chirality_lab/hypermap.hpp"

#include <numeric>

#include "chirality_lab/error.hpp"
#include "chirality_lab/group_algorithms.hpp"

namespace chirality_lab {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::logic_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Hypermap::Hypermap(Permutation r, Permutation l)
    : r_(std::move(r)), l_(std::move(l)), cache_(std::make_shared<Cache>()) {}

Hypermap Hypermap::make(Permutation r, Permutation l) {
  if (r.degree() != l.degree()) throw ValidationError("R and L act on different numbers of darts");
  if (!is_transitive_pair(r, l)) throw ValidationError("R and L do not act transitively on the darts");
  return Hypermap(std::move(r), std::move(l));
}

Hypermap Hypermap::regular(const TablePtr& table) {
  Hypermap h(table->regular_permutation(Gen::R), table->regular_permutation(Gen::L));
  std::call_once(h.cache_->once, [&] { h.cache_->table = table; });
  h.seeded_ = true;
  return h;
}

TablePtr Hypermap::monodromy(std::uint64_t budget) const {
  std::call_once(cache_->once, [&] { cache_->table = enumerate_group(r_, l_, budget); });
  return cache_->table;
}

HypermapType Hypermap::type() const { return {compose(r_, l_).order(), r_.order(), l_.order()}; }

Rational Hypermap::euler_characteristic() const {
  const auto [m, n, k] = type();
  using Wide = __int128;
  const Wide num = Wide(darts()) * (Wide(n) * k + Wide(m) * k + Wide(m) * n - Wide(m) * n * k);
  const Wide den = Wide(m) * n * k;
  const Wide g = [](Wide a, Wide b) {
    if (a < 0) a = -a;
    while (b) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }(num, den);
  return Rational::make(static_cast<std::int64_t>(num / g), static_cast<std::int64_t>(den / g));
}

std::optional<std::int64_t> Hypermap::genus() const {
  const Rational chi = euler_characteristic();
  if (chi.den != 1 || chi.num % 2 != 0) return std::nullopt;
  return (2 - chi.num) / 2;
}

bool Hypermap::is_orientably_regular(std::uint64_t budget) const { return monodromy(budget)->size() == darts(); }

Hypermap Hypermap::mirror() const {
  Hypermap out(r_.inverse(), l_.inverse());
  if (seeded_) {
    const CayleyTable& t = *cache_->table;
    std::array<std::vector<Index>, kGenCount> succ;
    for (Gen g : kGens) {
      const auto s = t.succ(inverse_of(g));
      succ[slot(g)].assign(s.begin(), s.end());
    }
    auto table = std::make_shared<const CayleyTable>(CayleyTable::from_successors(std::move(succ)));
    std::call_once(out.cache_->once, [&] { out.cache_->table = std::move(table); });
    out.seeded_ = true;
  }
  return out;
}

TablePtr require_regular(const Hypermap& h, std::uint64_t budget) {
  auto table = h.monodromy(budget);
  if (table->size() != h.darts())
    throw ValidationError("hypermap is not orientably regular: |Mon| = " + std::to_string(table->size()) +
                          " but darts = " + std::to_string(h.darts()));
  return table;
}

bool covers(const Hypermap& a, const Hypermap& b) {
  const auto ga = require_regular(a), gb = require_regular(b);
  return hom_extends(*ga, *gb, canonical_generators(*gb));
}

bool is_isomorphic_hypermap(const Hypermap& a, const Hypermap& b) {
  const auto ga = require_regular(a), gb = require_regular(b);
  return ga->size() == gb->size() && hom_extends(*ga, *gb, canonical_generators(*gb));
}

bool is_smooth_covering(const Hypermap& a, const Hypermap& b) { return covers(a, b) && a.type() == b.type(); }

Hypermap quotient_hypermap(const Hypermap& h, const SubgroupElements& n) {
  const auto g = require_regular(h);
  if (n.parent() != g) throw ValidationError("subgroup does not belong to this hypermap's monodromy group");
  return Hypermap::regular(quotient_group(n).table);
}

}  // namespace chirality_lab
