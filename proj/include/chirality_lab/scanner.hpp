#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chirality_lab/budgets.hpp"
#include "chirality_lab/catalog.hpp"
#include "chirality_lab/chirality.hpp"

namespace chirality_lab {

enum class ScanMode {
  StrongSymmetry,  // every ordered pair
  Witness,         // stop at the first asymmetric generating pair
  Sampled,         // seeded uniform pairs
};

ScanMode parse_scan_mode(const std::string& text);
std::string to_string(ScanMode mode);

struct ScanOptions {
  ScanMode mode = ScanMode::StrongSymmetry;
  std::uint64_t budget = 10'000'000;  // pair checks
  std::uint64_t samples = 100'000;    // sampled mode only
  std::uint64_t seed = 0;
  /// Run the pair BFS for asymmetric pairs to fill the kappa histogram.
  bool kappa_histogram = true;
  std::uint64_t pair_budget = std::uint64_t{1} << 26;
};

struct PairWitness {
  Index x = 0;
  Index y = 0;
  std::string x_word;  // in the canonical generators of the scanned table
  std::string y_word;
};

struct ScanResult {
  std::string group;
  std::uint64_t group_order = 0;
  ScanMode mode = ScanMode::StrongSymmetry;
  std::uint64_t pairs_total = 0;  // pairs checked
  std::uint64_t pairs_generating = 0;
  std::uint64_t pairs_asymmetric = 0;
  std::optional<PairWitness> witness;  // least asymmetric pair in scan order
  /// kappa -> number of generating pairs. Symmetric pairs land on 1.
  std::map<std::uint64_t, std::uint64_t> kappa_histogram;
  bool partial = false;  // stopped by the scan budget

  /// Meaningful only for complete exhaustive scans.
  bool strongly_symmetric() const { return pairs_asymmetric == 0; }
};

/// "R L R^-1", or "1" for the identity.
std::string format_word(const CayleyTable& g, Index x);

/// Exhaustive scan of all ordered pairs (x, y), x-major in index order.
ScanResult is_strongly_symmetric(const TablePtr& g, const ScanOptions& options = {}, std::string label = {});

/// First asymmetric generating pair in lexicographic index order.
std::optional<PairWitness> find_asymmetric_pair(const TablePtr& g, std::uint64_t budget = 10'000'000);

/// Dispatches on `options.mode`.
ScanResult scan_group(const TablePtr& g, const ScanOptions& options = {}, std::string label = {});

struct CensusEntry {
  std::string label;
  std::optional<ChiralityReport> report;
  std::vector<std::string> notes;
  std::string error;  // construction or analysis failure, run continues
  /// Names from {S3, S4, D3..D8} that X is isomorphic to. Always empty so far.
  std::vector<std::string> forbidden_isomorphisms;
};

struct CensusResult {
  std::vector<CensusEntry> entries;
  /// Labels of entries with a forbidden chirality group.
  std::vector<std::string> nonexistence_violations;
};

CensusResult census(const std::vector<FamilySpec>& specs, const Budgets& budgets = {});

/// The default census: metacyclic, affine, semilinear, alternating, cyclic,
/// dihedral, PSL2 and SL3 entries (about sixty).
std::vector<FamilySpec> default_census_specs();

}  // namespace chirality_lab
