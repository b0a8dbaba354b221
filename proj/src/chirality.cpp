#include "chirality_lab/chirality.hpp"

#include <stdexcept>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

ChiralityGroup chirality_group(const Hypermap& h, const Budgets& budgets, bool build_pair_table) {
  const TablePtr g = require_regular(h, budgets.group);
  PairGroupOptions options;
  options.budget = budgets.pairs;
  options.build_table = build_pair_table;
  PairGroup p = pair_group(g, g, inverted_generators(*g), options);
  const std::uint64_t kappa = p.order / g->size();
  if (kappa * g->size() != p.order || kappa != p.first_kernel.size())
    throw std::logic_error("pair group order is not kappa * |Mon|");
  return {std::move(p.first_kernel), kappa, p.order, std::move(p.table)};
}

Hypermap smallest_reflexible_cover(const Hypermap& h, const Budgets& budgets) {
  Budgets capped = budgets;
  capped.pairs = std::min(budgets.pairs, budgets.cover);
  return Hypermap::regular(chirality_group(h, capped, true).pair_table);
}

Hypermap largest_reflexible_quotient(const Hypermap& h, const Budgets& budgets) {
  return quotient_hypermap(h, chirality_group(h, budgets).x);
}

bool mirror_automorphism_exists(const Hypermap& h) {
  const TablePtr g = require_regular(h);
  return hom_extends(*g, *g, inverted_generators(*g));
}

bool is_reflexible(const Hypermap& h, const Budgets& budgets) {
  const bool by_hom = mirror_automorphism_exists(h);
  const bool by_kappa = chirality_group(h, budgets).kappa == 1;
  if (by_hom != by_kappa) throw std::logic_error("mirror automorphism test disagrees with kappa");
  return by_hom;
}

bool is_totally_chiral(const Hypermap& h, const Budgets& budgets) {
  return chirality_group(h, budgets).kappa == require_regular(h, budgets.group)->size();
}

ChiralityReport chirality_report(const Hypermap& h, const Budgets& budgets) {
  using Clock = std::chrono::steady_clock;
  ChiralityReport report;
  auto t0 = Clock::now();
  const TablePtr g = require_regular(h, budgets.group);
  report.darts = h.darts();
  report.monodromy_order = g->size();
  report.type = h.type();
  report.euler_char = h.euler_characteristic();
  report.genus = h.genus();
  report.monodromy_perfect = is_perfect(g);
  auto t1 = Clock::now();
  report.timings.monodromy = t1 - t0;

  const bool by_hom = hom_extends(*g, *g, inverted_generators(*g));
  try {
    ChiralityGroup x = chirality_group(h, budgets);
    report.kappa = x.kappa;
    report.kappa_lower_bound = x.kappa;
    report.pairs_explored = x.pair_order;
    auto t2 = Clock::now();
    report.timings.chirality = t2 - t1;
    report.x_structure = abelian_invariants(x.x);
    report.timings.structure = Clock::now() - t2;
  } catch (const BudgetExceeded& e) {
    report.budget_exceeded = true;
    report.pairs_explored = e.explored();
    report.kappa_lower_bound = (e.explored() + g->size() - 1) / g->size();
    report.timings.chirality = Clock::now() - t1;
  }

  report.reflexible = by_hom;
  if (report.kappa) {
    if ((*report.kappa == 1) != by_hom) throw std::logic_error("mirror automorphism test disagrees with kappa");
    report.totally_chiral = *report.kappa == report.monodromy_order;
    if (report.totally_chiral && report.monodromy_order > 1 && !report.monodromy_perfect)
      throw std::logic_error("totally chiral hypermap with a non-perfect monodromy group");
  }
  return report;
}

}  // namespace chirality_lab
