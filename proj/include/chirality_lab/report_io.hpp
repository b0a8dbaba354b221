#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chirality_lab/budgets.hpp"
#include "chirality_lab/catalog.hpp"
#include "chirality_lab/chirality.hpp"
#include "chirality_lab/lattice.hpp"
#include "chirality_lab/scanner.hpp"

namespace chirality_lab {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& text);

// .hm files: "darts N", "R <cycles>", "L <cycles>", one per line.

Hypermap parse_hm(const std::string& text);
std::string format_hm(const Hypermap& h);
Hypermap read_hm(const std::string& path);
void write_hm(const Hypermap& h, const std::string& path);

/// CSV columns, in order.
inline constexpr const char* kReportCsvHeader =
    "label,darts,monodromy_order,type_m,type_n,type_k,euler_num,euler_den,kappa,kappa_lower_bound,"
    "x_structure,reflexible,totally_chiral,perfect,budget_exceeded";

std::string report_json(const ChiralityReport& report, const std::string& label = {});
std::string report_csv_row(const ChiralityReport& report, const std::string& label = {});
std::string report_text(const ChiralityReport& report, const std::string& label = {});
std::string format_report(const ChiralityReport& report, OutputFormat format, const std::string& label = {});

std::string format_scan(const ScanResult& result, OutputFormat format);
std::string format_census(const CensusResult& result, OutputFormat format);
std::string format_factor(const FactorVerdict& verdict, OutputFormat format);

struct RunConfig {
  std::string subcommand;
  std::string input;             // .hm path
  std::string family;
  std::string params;
  std::string a;                 // .hm path or "family:k=v,..."
  std::string b;
  std::string group;             // scan substrate
  std::vector<std::string> specs;  // census entries; empty means the default census
  Budgets budgets;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100'000;
  std::string mode = "strong-symmetry";
  OutputFormat format = OutputFormat::Text;
  std::string out;               // empty means stdout
};

/// Exit codes: 0 success, 2 input or validation error, 3 budget exhausted.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chirality_lab
