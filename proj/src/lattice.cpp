#include "chirality_lab/lattice.hpp"

#include <algorithm>

#include "chirality_lab/chirality.hpp"
#include "chirality_lab/error.hpp"
#include "chirality_lab/group_algorithms.hpp"

namespace chirality_lab {

bool is_orthogonal(const Hypermap& h, const Hypermap& k, const Budgets& budgets) {
  require_regular(h, budgets.group);
  require_regular(k, budgets.group);
  const std::uint64_t n1 = h.darts(), n2 = k.darts();
  if (n1 * n2 > budgets.pairs)
    throw BudgetExceeded("product action on " + std::to_string(n1 * n2) + " dart pairs exceeds budget", 0);
  std::vector<bool> seen(n1 * n2, false);
  std::vector<std::uint64_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Dart a = static_cast<Dart>(queue[head] / n2), b = static_cast<Dart>(queue[head] % n2);
    for (std::uint64_t next : {std::uint64_t{h.r()(a)} * n2 + k.r()(b), std::uint64_t{h.l()(a)} * n2 + k.l()(b)}) {
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == n1 * n2;
}

Hypermap join(const Hypermap& h, const Hypermap& k, const Budgets& budgets) {
  const TablePtr g1 = require_regular(h, budgets.group), g2 = require_regular(k, budgets.group);
  PairGroupOptions options;
  options.budget = std::min(budgets.pairs, budgets.cover);
  options.build_table = true;
  return Hypermap::regular(pair_group(g1, g2, canonical_generators(*g2), options).table);
}

Hypermap join_all(const std::vector<Hypermap>& maps, const Budgets& budgets) {
  if (maps.empty()) throw ValidationError("join of an empty family");
  Hypermap acc = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) acc = join(acc, maps[i], budgets);
  return acc;
}

Hypermap meet(const Hypermap& h, const Hypermap& k, const Budgets& budgets) {
  const TablePtr g1 = require_regular(h, budgets.group), g2 = require_regular(k, budgets.group);
  PairGroupOptions options;
  options.budget = budgets.pairs;
  auto p = pair_group(g1, g2, canonical_generators(*g2), options);
  return quotient_hypermap(h, p.first_kernel);
}

Hypermap meet_from_second(const Hypermap& h, const Hypermap& k, const Budgets& budgets) {
  const TablePtr g1 = require_regular(h, budgets.group), g2 = require_regular(k, budgets.group);
  PairGroupOptions options;
  options.budget = budgets.pairs;
  auto p = pair_group(g1, g2, canonical_generators(*g2), options);
  return quotient_hypermap(k, p.second_kernel);
}

FactorVerdict verify_factor_proposition(const Hypermap& k_map, const Hypermap& h_map, const Budgets& budgets) {
  FactorVerdict verdict;
  const TablePtr gk = require_regular(k_map, budgets.group), gh = require_regular(h_map, budgets.group);
  if (std::uint64_t{gk->size()} * gh->size() > budgets.pairs) {
    verdict.failed_precondition = "|Mon(K)| * |Mon(H)| exceeds the pair budget";
    return verdict;
  }
  const auto covering = extend_homomorphism(*gk, *gh, canonical_generators(*gh));
  if (!covering) {
    verdict.failed_precondition = "K does not cover H";
    return verdict;
  }
  if (chirality_group(k_map, budgets).kappa != gk->size()) {
    verdict.failed_precondition = "K is not totally chiral";
    return verdict;
  }
  verdict.preconditions_met = true;

  std::vector<Index> kernel;
  for (std::size_t x = 0; x < gk->size(); ++x)
    if ((*covering)[x] == 0) kernel.push_back(static_cast<Index>(x));
  const SubgroupElements kernel_group(gk, std::move(kernel));

  const Hypermap l_map = join(k_map, h_map.mirror(), budgets);
  const ChiralityGroup x = chirality_group(l_map, budgets);
  verdict.chirality_order = x.kappa;
  verdict.kernel_order = kernel_group.size();
  verdict.isomorphic = are_isomorphic(x.x, kernel_group, budgets.isomorphism);
  return verdict;
}

}  // namespace chirality_lab
