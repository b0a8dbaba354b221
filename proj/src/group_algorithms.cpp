#include "chirality_lab/group_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "chirality_lab/error.hpp"
#include "pair_index.hpp"

namespace chirality_lab {

GeneratorTargets inverted_generators(const CayleyTable& g) {
  return {g.generator(Gen::RInv), g.generator(Gen::LInv)};
}

GeneratorTargets canonical_generators(const CayleyTable& h) { return {h.generator(Gen::R), h.generator(Gen::L)}; }

namespace {

// Right multiplication on H by t_r, t_l, t_r^-1, t_l^-1, in Gen slot order.
std::array<std::vector<Index>, kGenCount> target_maps(const CayleyTable& h, GeneratorTargets t) {
  return {h.right_multiplication_map(t.r), h.right_multiplication_map(t.l),
          h.right_multiplication_map(h.inverse(t.r)), h.right_multiplication_map(h.inverse(t.l))};
}

template <typename Visited>
PairGroup run_pair_bfs(Visited& visited, const TablePtr& g, const TablePtr& h, GeneratorTargets targets,
                       const PairGroupOptions& options) {
  const auto right = target_maps(*h, targets);
  std::vector<Index> first, second;
  first.reserve(1u << 12);
  second.reserve(1u << 12);
  std::vector<Index> left_of{0}, right_of{0};
  std::array<std::vector<Index>, kGenCount> succ;
  visited.find_or_insert(0, 0, 0);

  for (std::size_t head = 0; head < left_of.size(); ++head) {
    const Index a = left_of[head], b = right_of[head];
    if (b == 0) first.push_back(a);
    if (a == 0) second.push_back(b);
    for (Gen gen : kGens) {
      const Index na = g->step(a, gen);
      const Index nb = right[slot(gen)][b];
      const auto fresh = static_cast<Index>(left_of.size());
      Index found = visited.find_or_insert(na, nb, fresh);
      if (found == CayleyTable::kNone) {
        if (left_of.size() >= options.budget)
          throw BudgetExceeded("pair group exceeds budget " + std::to_string(options.budget), left_of.size());
        left_of.push_back(na);
        right_of.push_back(nb);
        found = fresh;
      }
      if (options.build_table) succ[slot(gen)].push_back(found);
    }
  }

  PairGroup out{left_of.size(), SubgroupElements(g, std::move(first)), SubgroupElements(h, std::move(second)),
                nullptr};
  if (options.build_table) {
    left_of = {};
    right_of = {};
    out.table = std::make_shared<const CayleyTable>(CayleyTable::from_successors(std::move(succ)));
  }
  return out;
}

// Incrementally maintained subgroup <gens> of a table.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const TablePtr& g) : g_(g), in_(g->size(), 0), members_{0} { in_[0] = 1; }

  bool contains(Index x) const { return in_[x] != 0; }

  bool add_generator(Index s) {
    if (in_[s]) return false;
    gens_.push_back(s);
    maps_.push_back(g_->right_multiplication_map(s));
    const auto& fresh_map = maps_.back();
    std::vector<Index> queue;
    for (Index m : members_) push(fresh_map[m], queue);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& map : maps_) push(map[queue[head]], queue);
    members_.insert(members_.end(), queue.begin(), queue.end());
    return true;
  }

  SubgroupElements build() && { return SubgroupElements(g_, std::move(members_), std::move(gens_)); }

 private:
  void push(Index x, std::vector<Index>& queue) {
    if (!in_[x]) {
      in_[x] = 1;
      queue.push_back(x);
    }
  }

  TablePtr g_;
  std::vector<char> in_;
  std::vector<Index> members_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> maps_;
};

}  // namespace

PairGroup pair_group(const TablePtr& g, const TablePtr& h, GeneratorTargets targets, const PairGroupOptions& options) {
  const std::uint64_t product = std::uint64_t{g->size()} * h->size();
  if (product <= detail::kDensePairLimit) {
    detail::DensePairIndex visited(g->size(), h->size());
    return run_pair_bfs(visited, g, h, targets, options);
  }
  detail::HashedPairIndex visited;
  return run_pair_bfs(visited, g, h, targets, options);
}

std::optional<std::vector<Index>> extend_homomorphism(const CayleyTable& g, const CayleyTable& h,
                                                      GeneratorTargets targets) {
  const auto right = target_maps(h, targets);
  std::vector<Index> image(g.size(), CayleyTable::kNone);
  image[0] = 0;
  // Indices are in BFS order, so every element's image is fixed by its tree
  // parent before the element itself is scanned.
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (Gen gen : kGens) {
      const Index y = g.step(static_cast<Index>(x), gen);
      const Index expected = right[slot(gen)][image[x]];
      if (image[y] == CayleyTable::kNone)
        image[y] = expected;
      else if (image[y] != expected)
        return std::nullopt;
    }
  }
  return image;
}

bool hom_extends(const CayleyTable& g, const CayleyTable& h, GeneratorTargets targets) {
  return extend_homomorphism(g, h, targets).has_value();
}

SubgroupElements subgroup_closure(const TablePtr& g, const std::vector<Index>& gens) {
  SubgroupBuilder builder(g);
  for (Index s : gens) builder.add_generator(s);
  return std::move(builder).build();
}

SubgroupElements normal_closure(const TablePtr& g, const std::vector<Index>& seeds) {
  SubgroupBuilder builder(g);
  std::vector<Index> pending(seeds.rbegin(), seeds.rend());
  // A subgroup is normal once the conjugates of its generators by R and L lie
  // inside it.
  while (!pending.empty()) {
    const Index s = pending.back();
    pending.pop_back();
    if (!builder.add_generator(s)) continue;
    pending.push_back(g->conjugate(s, Gen::L));
    pending.push_back(g->conjugate(s, Gen::R));
  }
  return std::move(builder).build();
}

Quotient quotient_group(const SubgroupElements& n) {
  if (!n.is_normal()) throw ValidationError("quotient by a subgroup that is not normal");
  const CayleyTable& g = *n.parent();
  std::vector<Index> label(g.size(), CayleyTable::kNone);
  std::vector<Index> reps;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (label[x] != CayleyTable::kNone) continue;
    const auto coset = static_cast<Index>(reps.size());
    reps.push_back(static_cast<Index>(x));
    for (Index m : n.members()) label[g.multiply(static_cast<Index>(x), m)] = coset;
  }
  std::array<std::vector<Index>, kGenCount> succ;
  for (Gen gen : kGens) {
    succ[slot(gen)].resize(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) succ[slot(gen)][c] = label[g.step(reps[c], gen)];
  }
  std::vector<Index> relabel;
  auto table = std::make_shared<const CayleyTable>(CayleyTable::from_successors(std::move(succ), 0, &relabel));
  Quotient out{table, std::vector<Index>(g.size()), std::vector<Index>(reps.size())};
  for (std::size_t x = 0; x < g.size(); ++x) out.projection[x] = relabel[label[x]];
  for (std::size_t c = 0; c < reps.size(); ++c) out.representatives[relabel[c]] = reps[c];
  return out;
}

SubgroupElements derived_subgroup(const TablePtr& g) {
  return normal_closure(g, {g->commutator(g->generator(Gen::R), g->generator(Gen::L))});
}

bool is_perfect(const TablePtr& g) { return derived_subgroup(g).is_whole(); }

std::string GroupStructure::compact() const {
  if (!abelian) return "nonabelian:" + std::to_string(order);
  if (invariants.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < invariants.size(); ++i) out << (i ? "." : "") << invariants[i];
  return out.str();
}

std::string GroupStructure::describe() const {
  if (!abelian) return "nonabelian of order " + std::to_string(order);
  if (invariants.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < invariants.size(); ++i) out << (i ? " x " : "") << 'C' << invariants[i];
  return out.str();
}

namespace {

// Arithmetic on the members of a subgroup, addressed by position.
class LocalGroup {
 public:
  explicit LocalGroup(const SubgroupElements& n) : n_(n), g_(*n.parent()) {}

  std::size_t size() const { return n_.size(); }
  Index element(Index pos) const { return n_.members()[pos]; }
  Index mul(Index i, Index j) const { return n_.position(g_.multiply(element(i), element(j))); }

  // Positions of a generating set, preferring elements of large order.
  std::vector<Index> generating_set(const std::vector<std::uint64_t>& orders) const {
    std::vector<Index> by_order(size());
    std::iota(by_order.begin(), by_order.end(), Index{0});
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Index a, Index b) { return orders[a] > orders[b]; });
    std::vector<char> in(size(), 0);
    std::vector<Index> members{0}, gens;
    in[0] = 1;
    for (Index cand : by_order) {
      if (in[cand]) continue;
      gens.push_back(cand);
      std::vector<Index> queue;
      auto push = [&](Index x) {
        if (!in[x]) {
          in[x] = 1;
          queue.push_back(x);
        }
      };
      for (Index m : members) push(mul(m, cand));
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (Index s : gens) push(mul(queue[head], s));
      members.insert(members.end(), queue.begin(), queue.end());
      if (members.size() == size()) break;
    }
    return gens;
  }

  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out(size());
    for (Index i = 0; i < size(); ++i) out[i] = g_.element_order(element(i));
    return out;
  }

 private:
  const SubgroupElements& n_;
  const CayleyTable& g_;
};

}  // namespace

GroupStructure abelian_invariants(const SubgroupElements& n) {
  GroupStructure out;
  out.order = n.size();
  if (n.is_trivial()) return out;
  LocalGroup local(n);
  const auto gens = local.generating_set(local.orders());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (local.mul(gens[i], gens[j]) != local.mul(gens[j], gens[i])) {
        out.abelian = false;
        return out;
      }

  // Peel off a cyclic direct factor of maximal order until nothing is left;
  // the orders found come out largest first.
  std::vector<char> in(local.size(), 0);
  std::vector<Index> sub{0};
  in[0] = 1;
  while (sub.size() < local.size()) {
    Index best = 0;
    std::uint64_t best_order = 0;
    for (Index m = 0; m < local.size(); ++m) {
      if (in[m]) continue;
      std::uint64_t k = 1;
      for (Index y = m; !in[y]; y = local.mul(y, m)) ++k;
      if (k > best_order) {
        best_order = k;
        best = m;
      }
    }
    out.invariants.push_back(best_order);
    std::vector<Index> grown;
    grown.reserve(sub.size() * best_order);
    for (Index s : sub) {
      Index y = s;
      for (std::uint64_t i = 0; i < best_order; ++i) {
        grown.push_back(y);
        y = local.mul(y, best);
      }
    }
    for (Index y : grown) in[y] = 1;
    sub = std::move(grown);
  }
  std::reverse(out.invariants.begin(), out.invariants.end());
  return out;
}

std::vector<std::vector<Index>> conjugacy_classes(const CayleyTable& g) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<Index>> classes;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Index> cls{static_cast<Index>(x)};
    seen[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (Gen gen : {Gen::R, Gen::L}) {
        const Index y = g.conjugate(cls[head], gen);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_simple(const TablePtr& g, std::uint64_t budget) {
  if (g->size() > budget)
    throw BudgetExceeded("simplicity check needs |G| <= " + std::to_string(budget), g->size());
  if (g->size() == 1) return false;
  const auto classes = conjugacy_classes(*g);
  for (std::size_t c = 1; c < classes.size(); ++c)
    if (!normal_closure(g, {classes[c].front()}).is_whole()) return false;
  return true;
}

std::map<std::uint64_t, std::uint64_t> order_histogram(const SubgroupElements& n) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (Index m : n.members()) ++out[n.parent()->element_order(m)];
  return out;
}

bool are_isomorphic(const SubgroupElements& a, const SubgroupElements& b, std::uint64_t budget) {
  if (a.size() != b.size()) return false;
  if (a.size() > budget)
    throw BudgetExceeded("isomorphism test needs order <= " + std::to_string(budget), a.size());
  LocalGroup la(a), lb(b);
  const auto orders_a = la.orders(), orders_b = lb.orders();
  auto histogram = [](const std::vector<std::uint64_t>& orders) {
    std::map<std::uint64_t, std::uint64_t> h;
    for (auto o : orders) ++h[o];
    return h;
  };
  if (histogram(orders_a) != histogram(orders_b)) return false;
  const auto sa = abelian_invariants(a), sb = abelian_invariants(b);
  if (sa.abelian != sb.abelian) return false;
  if (sa.abelian) return sa.invariants == sb.invariants;

  const auto gens = la.generating_set(orders_a);
  const std::size_t k = gens.size();
  std::vector<std::vector<Index>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Index pos = 0; pos < lb.size(); ++pos)
      if (orders_b[pos] == orders_a[gens[i]]) candidates[i].push_back(pos);

  std::vector<std::vector<Index>> right_a(k, std::vector<Index>(la.size()));
  for (std::size_t i = 0; i < k; ++i)
    for (Index x = 0; x < la.size(); ++x) right_a[i][x] = la.mul(x, gens[i]);
  std::map<Index, std::vector<Index>> right_b;
  auto map_b = [&](Index t) -> const std::vector<Index>& {
    auto it = right_b.find(t);
    if (it != right_b.end()) return it->second;
    std::vector<Index> m(lb.size());
    for (Index y = 0; y < lb.size(); ++y) m[y] = lb.mul(y, t);
    return right_b.emplace(t, std::move(m)).first->second;
  };

  std::vector<Index> chosen(k);
  // Checks that gens[0..depth] -> chosen[0..depth] extends to an injective
  // homomorphism on the subgroup they generate.
  auto consistent = [&](std::size_t depth) {
    std::vector<Index> image(la.size(), CayleyTable::kNone);
    std::vector<char> used(lb.size(), 0);
    std::vector<Index> queue{0};
    image[0] = 0;
    used[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index x = queue[head];
      for (std::size_t i = 0; i <= depth; ++i) {
        const Index y = right_a[i][x];
        const Index expected = map_b(chosen[i])[image[x]];
        if (image[y] == CayleyTable::kNone) {
          if (used[expected]) return false;
          used[expected] = 1;
          image[y] = expected;
          queue.push_back(y);
        } else if (image[y] != expected) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t depth) {
    if (depth == k) return true;
    for (Index t : candidates[depth]) {
      chosen[depth] = t;
      if (consistent(depth) && search(depth + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace chirality_lab
