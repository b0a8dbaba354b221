#include "chirality_lab/scanner.hpp"

#include <random>
#include <sstream>

#include "chirality_lab/error.hpp"
#include "chirality_lab/group_algorithms.hpp"

namespace chirality_lab {

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "strong-symmetry") return ScanMode::StrongSymmetry;
  if (text == "witness") return ScanMode::Witness;
  if (text == "sampled") return ScanMode::Sampled;
  throw ValidationError("unknown scan mode '" + text + "' (strong-symmetry, witness, sampled)");
}

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::StrongSymmetry: return "strong-symmetry";
    case ScanMode::Witness: return "witness";
    case ScanMode::Sampled: return "sampled";
  }
  return "?";
}

std::string format_word(const CayleyTable& g, Index x) {
  const auto word = g.word(x);
  if (word.empty()) return "1";
  static const char* names[kGenCount] = {"R", "L", "R^-1", "L^-1"};
  std::string out;
  for (Gen s : word) {
    if (!out.empty()) out += ' ';
    out += names[slot(s)];
  }
  return out;
}

namespace {

constexpr std::size_t kMaxTableOrder = 8192;

// Dense multiplication table plus one reusable BFS workspace.
class PairChecker {
 public:
  explicit PairChecker(const TablePtr& g) : g_(g), n_(g->size()) {
    if (n_ > kMaxTableOrder)
      throw BudgetExceeded("group of order " + std::to_string(n_) + " is too large to scan", 0);
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      Index* row = &mul_[a * n_];
      row[0] = static_cast<Index>(a);
      for (std::size_t y = 1; y < n_; ++y) row[y] = g->step(row[g->parent(y)], g->parent_gen(y));
    }
    inverse_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) inverse_[a] = g->inverse(static_cast<Index>(a));
    seen_.assign(n_, 0);
    image_.resize(n_);
    queue_.reserve(n_);
  }

  struct Verdict {
    bool generating = false;
    bool symmetric = false;
  };

  // One BFS decides both <x, y> = G and whether x -> x^-1, y -> y^-1
  // extends along every edge, i.e. to an automorphism.
  Verdict check(Index x, Index y) {
    if (++epoch_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      epoch_ = 1;
    }
    const Index gens[2] = {x, y};
    const Index targets[2] = {inverse_[x], inverse_[y]};
    bool consistent = true;
    queue_.clear();
    queue_.push_back(0);
    seen_[0] = epoch_;
    image_[0] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Index z = queue_[head];
      const Index* row = &mul_[std::size_t{z} * n_];
      const Index* image_row = &mul_[std::size_t{image_[z]} * n_];
      for (int s = 0; s < 2; ++s) {
        const Index t = row[gens[s]];
        const Index img = image_row[targets[s]];
        if (seen_[t] != epoch_) {
          seen_[t] = epoch_;
          image_[t] = img;
          queue_.push_back(t);
        } else if (image_[t] != img) {
          consistent = false;
        }
      }
    }
    const bool generating = queue_.size() == n_;
    return {generating, generating && consistent};
  }

  // Mon of the regular hypermap (G, x, y).
  TablePtr pair_table(Index x, Index y) const {
    std::array<std::vector<Index>, kGenCount> succ;
    const Index by[kGenCount] = {x, y, inverse_[x], inverse_[y]};
    for (std::size_t s = 0; s < kGenCount; ++s) {
      succ[s].resize(n_);
      for (std::size_t z = 0; z < n_; ++z) succ[s][z] = mul_[z * n_ + by[s]];
    }
    return std::make_shared<const CayleyTable>(CayleyTable::from_successors(std::move(succ)));
  }

  std::size_t order() const { return n_; }

 private:
  TablePtr g_;
  std::size_t n_;
  std::vector<Index> mul_;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> seen_;
  std::vector<Index> image_;
  std::vector<Index> queue_;
  std::uint32_t epoch_ = 0;
};

// Returns false to stop the scan.
bool record(PairChecker& checker, const TablePtr& g, Index x, Index y, const ScanOptions& options,
            std::optional<bool>& simple, ScanResult& result) {
  ++result.pairs_total;
  const auto verdict = checker.check(x, y);
  if (!verdict.generating) return true;
  ++result.pairs_generating;
  if (verdict.symmetric) {
    ++result.kappa_histogram[1];
    return true;
  }
  ++result.pairs_asymmetric;
  if (!result.witness) result.witness = PairWitness{x, y, format_word(*g, x), format_word(*g, y)};
  if (options.kappa_histogram) {
    // X is a nontrivial normal subgroup, so in a simple group it is everything
    if (!simple) simple = g->size() <= 10'000 && is_simple(g);
    if (*simple) {
      ++result.kappa_histogram[g->size()];
      return options.mode != ScanMode::Witness;
    }
    Budgets budgets;
    budgets.pairs = options.pair_budget;
    const auto x_group = chirality_group(Hypermap::regular(checker.pair_table(x, y)), budgets);
    ++result.kappa_histogram[x_group.kappa];
  }
  return options.mode != ScanMode::Witness;
}

}  // namespace

ScanResult scan_group(const TablePtr& g, const ScanOptions& options, std::string label) {
  ScanResult result;
  result.group = std::move(label);
  result.group_order = g->size();
  result.mode = options.mode;
  PairChecker checker(g);
  const auto n = static_cast<Index>(g->size());
  std::optional<bool> simple;

  if (options.mode == ScanMode::Sampled) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    const std::uint64_t want = std::min(options.samples, options.budget);
    result.partial = want < options.samples;
    for (std::uint64_t i = 0; i < want; ++i) {
      const Index x = pick(rng);
      const Index y = pick(rng);
      record(checker, g, x, y, options, simple, result);
    }
    return result;
  }

  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (result.pairs_total >= options.budget) {
        result.partial = true;
        return result;
      }
      if (!record(checker, g, x, y, options, simple, result)) return result;
    }
  }
  return result;
}

ScanResult is_strongly_symmetric(const TablePtr& g, const ScanOptions& options, std::string label) {
  ScanOptions exhaustive = options;
  if (exhaustive.mode == ScanMode::Sampled) exhaustive.mode = ScanMode::StrongSymmetry;
  return scan_group(g, exhaustive, std::move(label));
}

std::optional<PairWitness> find_asymmetric_pair(const TablePtr& g, std::uint64_t budget) {
  ScanOptions options;
  options.mode = ScanMode::Witness;
  options.budget = budget;
  options.kappa_histogram = false;
  const ScanResult result = scan_group(g, options);
  if (!result.witness && result.partial)
    throw BudgetExceeded("scan budget exhausted before the pair search finished", result.pairs_total);
  return result.witness;
}

// ---------------------------------------------------------------------------

namespace {

struct ForbiddenGroup {
  std::string name;
  TablePtr table;
};

const std::vector<ForbiddenGroup>& forbidden_groups() {
  static const std::vector<ForbiddenGroup> groups = [] {
    std::vector<ForbiddenGroup> out{{"S3", symmetric_group(3)}, {"S4", symmetric_group(4)}};
    for (int n = 3; n <= 8; ++n) out.push_back({"D" + std::to_string(n), dihedral_group(n)});
    return out;
  }();
  return groups;
}

}  // namespace

CensusResult census(const std::vector<FamilySpec>& specs, const Budgets& budgets) {
  CensusResult result;
  for (const auto& spec : specs) {
    CensusEntry entry;
    entry.label = spec.label();
    try {
      Construction c = build_hypermap(spec, budgets);
      entry.notes = std::move(c.notes);
      if (!c.chirality_in_budget) {
        entry.notes.push_back("order-only: |Mon| = " + std::to_string(c.hypermap.darts()));
        result.entries.push_back(std::move(entry));
        continue;
      }
      entry.report = chirality_report(c.hypermap, budgets);
      const auto& report = *entry.report;
      if (report.kappa && report.x_structure && !report.x_structure->abelian) {
        std::optional<ChiralityGroup> x;
        for (const auto& forbidden : forbidden_groups()) {
          if (forbidden.table->size() != *report.kappa) continue;
          if (!x) x = chirality_group(c.hypermap, budgets);
          if (are_isomorphic(x->x, SubgroupElements::whole(forbidden.table), budgets.isomorphism))
            entry.forbidden_isomorphisms.push_back(forbidden.name);
        }
      }
      if (!entry.forbidden_isomorphisms.empty()) result.nonexistence_violations.push_back(entry.label);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

std::vector<FamilySpec> default_census_specs() {
  std::vector<std::string> compact{
      "trivial",
      // metacyclic, s = 0
      "metacyclic:n=7,m=3,r=2", "metacyclic:n=7,m=3,r=4", "metacyclic:n=7,m=6,r=3", "metacyclic:n=9,m=3,r=4",
      "metacyclic:n=9,m=3,r=7", "metacyclic:n=5,m=4,r=2", "metacyclic:n=5,m=4,r=3", "metacyclic:n=8,m=4,r=3",
      "metacyclic:n=10,m=4,r=3", "metacyclic:n=11,m=5,r=3", "metacyclic:n=12,m=4,r=5", "metacyclic:n=13,m=3,r=3",
      "metacyclic:n=13,m=4,r=5", "metacyclic:n=13,m=6,r=4", "metacyclic:n=16,m=4,r=3", "metacyclic:n=19,m=3,r=7",
      "metacyclic:n=21,m=3,r=4", "metacyclic:n=31,m=5,r=2", "metacyclic:n=6,m=2,r=5",
      // metacyclic, s != 0
      "metacyclic:n=9,m=3,r=4,s=3", "metacyclic:n=9,m=3,r=7,s=3", "metacyclic:n=8,m=4,r=5,s=2",
      "metacyclic:n=16,m=4,r=5,s=4",
      // affine and semilinear
      "agl1:q=2", "agl1:q=3", "agl1:q=4", "agl1:q=5", "agl1:q=7", "agl1:q=8", "agl1:q=9", "agl1:q=11", "agl1:q=13",
      "agl1:q=16", "agammal1:q=4", "agammal1:q=8", "agammal1:q=16", "agammal1:q=32",
      // simple and almost simple
      "alt:n=5", "alt:n=6", "alt:n=7", "psl2:q=4", "psl2:q=5", "psl2:q=7", "psl2:q=8", "psl2:q=9", "psl2:q=11",
      "sl3:q=2,seed=1", "sl3:q=3,seed=1", "sl3:q=4,seed=1",
      // abelian, dihedral, symmetric
      "cyclic:p=5,i=1,j=0", "cyclic:p=5,i=0,j=1", "cyclic:p=5,i=1,j=2", "cyclic:p=7,i=1,j=3", "cyclic:p=12,i=1,j=5",
      "cyclic:p=1,i=0,j=0", "dihedral:n=3", "dihedral:n=4", "dihedral:n=5", "dihedral:n=6", "dihedral:n=8",
      "symmetric:n=3", "symmetric:n=4"};
  std::vector<FamilySpec> specs;
  specs.reserve(compact.size());
  for (const auto& c : compact) specs.push_back(FamilySpec::parse(c));
  return specs;
}

}  // namespace chirality_lab
