#include "chirality_lab/report_io.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chirality_lab/error.hpp"

namespace chirality_lab {

using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw ValidationError("unknown format '" + text + "' (text, json, csv)");
}

// ---------------------------------------------------------------------------
// .hm files

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

Permutation parse_generator_line(const std::string& line, std::size_t number, char tag, std::size_t darts) {
  if (line.size() < 3 || line[0] != tag || line[1] != ' ')
    fail_at(number, std::string("expected '") + tag + " <cycles>'");
  try {
    return parse_permutation(std::string_view(line).substr(2), darts);
  } catch (const ValidationError& e) {
    fail_at(number, e.what());
  }
}

}  // namespace

Hypermap parse_hm(const std::string& text) {
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].find('\r') != std::string::npos) fail_at(i + 1, "CR in line ending, expected LF");
  if (lines.size() < 3) fail_at(lines.size() + 1, "expected 'darts N', 'R ...' and 'L ...' lines");
  for (std::size_t i = 3; i < lines.size(); ++i)
    if (!lines[i].empty()) fail_at(i + 1, "unexpected trailing content");

  const std::string& head = lines[0];
  constexpr std::string_view kDarts = "darts ";
  if (head.compare(0, kDarts.size(), kDarts) != 0) fail_at(1, "expected 'darts N'");
  const std::string count = head.substr(kDarts.size());
  if (count.empty() || count.size() > 9 || count.find_first_not_of("0123456789") != std::string::npos ||
      count[0] == '0')
    fail_at(1, "dart count must be a positive integer");
  const std::size_t darts = std::stoul(count);

  Permutation r = parse_generator_line(lines[1], 2, 'R', darts);
  Permutation l = parse_generator_line(lines[2], 3, 'L', darts);
  return Hypermap::make(std::move(r), std::move(l));
}

std::string format_hm(const Hypermap& h) {
  return "darts " + std::to_string(h.darts()) + "\nR " + format_permutation(h.r()) + "\nL " +
         format_permutation(h.l()) + "\n";
}

Hypermap read_hm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_hm(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_hm(const Hypermap& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << format_hm(h);
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* bool_text(bool b) { return b ? "true" : "false"; }

ordered_json report_object(const ChiralityReport& r, const std::string& label) {
  ordered_json j;
  if (!label.empty()) j["label"] = label;
  j["darts"] = r.darts;
  j["monodromy_order"] = r.monodromy_order;
  j["type"] = {r.type.m, r.type.n, r.type.k};
  j["euler_char"] = {{"num", r.euler_char.num}, {"den", r.euler_char.den}};
  j["genus"] = r.genus ? ordered_json(*r.genus) : ordered_json(nullptr);
  j["kappa"] = r.kappa ? ordered_json(*r.kappa) : ordered_json(nullptr);
  j["kappa_lower_bound"] = r.kappa_lower_bound;
  j["pairs_explored"] = r.pairs_explored;
  j["x_structure"] = r.x_structure ? ordered_json(r.x_structure->compact()) : ordered_json(nullptr);
  j["reflexible"] = r.reflexible;
  j["totally_chiral"] = r.totally_chiral;
  j["perfect"] = r.monodromy_perfect;
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

}  // namespace

std::string report_json(const ChiralityReport& report, const std::string& label) {
  return report_object(report, label).dump(2) + "\n";
}

std::string report_csv_row(const ChiralityReport& r, const std::string& label) {
  std::ostringstream o;
  o << csv_field(label) << ',' << r.darts << ',' << r.monodromy_order << ',' << r.type.m << ',' << r.type.n << ','
    << r.type.k << ',' << r.euler_char.num << ',' << r.euler_char.den << ','
    << (r.kappa ? std::to_string(*r.kappa) : "") << ',' << r.kappa_lower_bound << ','
    << csv_field(r.x_structure ? r.x_structure->compact() : "") << ',' << bool_text(r.reflexible) << ','
    << bool_text(r.totally_chiral) << ',' << bool_text(r.monodromy_perfect) << ',' << bool_text(r.budget_exceeded);
  return o.str();
}

std::string report_text(const ChiralityReport& r, const std::string& label) {
  std::ostringstream o;
  if (!label.empty()) o << "hypermap         " << label << '\n';
  o << "darts            " << r.darts << '\n';
  o << "monodromy order  " << r.monodromy_order << '\n';
  o << "type (m, n, k)   (" << r.type.m << ", " << r.type.n << ", " << r.type.k << ")\n";
  o << "euler char       " << r.euler_char.to_string() << '\n';
  if (r.genus) o << "genus            " << *r.genus << '\n';
  if (r.kappa) {
    o << "kappa            " << *r.kappa << '\n';
    o << "X                " << (r.x_structure ? r.x_structure->describe() : "?") << '\n';
  } else {
    o << "kappa            >= " << r.kappa_lower_bound << " (pair budget exhausted after " << r.pairs_explored
      << " pairs)\n";
  }
  o << "reflexible       " << yes_no(r.reflexible) << '\n';
  if (r.kappa) o << "totally chiral   " << yes_no(r.totally_chiral) << '\n';
  o << "perfect          " << yes_no(r.monodromy_perfect) << '\n';
  return o.str();
}

std::string format_report(const ChiralityReport& report, OutputFormat format, const std::string& label) {
  switch (format) {
    case OutputFormat::Json: return report_json(report, label);
    case OutputFormat::Csv: return std::string(kReportCsvHeader) + "\n" + report_csv_row(report, label) + "\n";
    case OutputFormat::Text: break;
  }
  return report_text(report, label);
}

std::string format_scan(const ScanResult& s, OutputFormat format) {
  const bool exhaustive = s.mode != ScanMode::Sampled && !s.partial;
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["group"] = s.group;
    j["order"] = s.group_order;
    j["mode"] = to_string(s.mode);
    j["pairs_total"] = s.pairs_total;
    j["pairs_generating"] = s.pairs_generating;
    j["pairs_asymmetric"] = s.pairs_asymmetric;
    j["partial"] = s.partial;
    if (s.pairs_asymmetric > 0)
      j["strongly_symmetric"] = false;
    else if (exhaustive && s.mode == ScanMode::StrongSymmetry)
      j["strongly_symmetric"] = true;
    else
      j["strongly_symmetric"] = nullptr;
    if (s.witness)
      j["witness"] = {{"x", s.witness->x}, {"y", s.witness->y}, {"x_word", s.witness->x_word},
                      {"y_word", s.witness->y_word}};
    else
      j["witness"] = nullptr;
    ordered_json hist = ordered_json::object();
    for (const auto& [kappa, count] : s.kappa_histogram) hist[std::to_string(kappa)] = count;
    j["kappa_histogram"] = hist;
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::Csv) {
    std::ostringstream o;
    o << "group,order,mode,pairs_total,pairs_generating,pairs_asymmetric,partial,witness_x,witness_y,witness_x_word,"
         "witness_y_word\n";
    o << csv_field(s.group) << ',' << s.group_order << ',' << to_string(s.mode) << ',' << s.pairs_total << ','
      << s.pairs_generating << ',' << s.pairs_asymmetric << ',' << bool_text(s.partial) << ',';
    if (s.witness)
      o << s.witness->x << ',' << s.witness->y << ',' << csv_field(s.witness->x_word) << ','
        << csv_field(s.witness->y_word);
    else
      o << ",,,";
    o << '\n';
    return o.str();
  }
  std::ostringstream o;
  o << "group              " << s.group << " (order " << s.group_order << ")\n";
  o << "mode               " << to_string(s.mode) << (s.partial ? " (partial: scan budget exhausted)" : "") << '\n';
  o << "pairs checked      " << s.pairs_total << '\n';
  o << "generating pairs   " << s.pairs_generating << '\n';
  o << "asymmetric pairs   " << s.pairs_asymmetric << '\n';
  if (s.witness)
    o << "witness            x = " << s.witness->x << " [" << s.witness->x_word << "], y = " << s.witness->y << " ["
      << s.witness->y_word << "]\n";
  o << "kappa histogram   ";
  for (const auto& [kappa, count] : s.kappa_histogram) o << ' ' << kappa << ':' << count;
  o << '\n';
  if (s.pairs_asymmetric > 0)
    o << "verdict            not strongly symmetric\n";
  else if (exhaustive && s.mode == ScanMode::StrongSymmetry)
    o << "verdict            strongly symmetric\n";
  else
    o << "verdict            no asymmetric pair found\n";
  return o.str();
}

std::string format_census(const CensusResult& c, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : c.entries) {
      ordered_json j;
      j["label"] = e.label;
      j["report"] = e.report ? report_object(*e.report, {}) : ordered_json(nullptr);
      j["notes"] = e.notes;
      j["error"] = e.error.empty() ? ordered_json(nullptr) : ordered_json(e.error);
      j["forbidden_isomorphisms"] = e.forbidden_isomorphisms;
      entries.push_back(std::move(j));
    }
    ordered_json j;
    j["entries"] = std::move(entries);
    j["nonexistence_violations"] = c.nonexistence_violations;
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  if (format == OutputFormat::Csv) {
    o << kReportCsvHeader << ",error\n";
    for (const auto& e : c.entries) {
      if (e.report)
        o << report_csv_row(*e.report, e.label) << ",\n";
      else
        o << csv_field(e.label) << ",,,,,,,,,,,,,," << csv_field(e.error.empty() ? "order-only" : e.error) << '\n';
    }
    return o.str();
  }
  for (const auto& e : c.entries) {
    o << e.label << ": ";
    if (!e.error.empty()) {
      o << "error: " << e.error << '\n';
      continue;
    }
    if (!e.report) {
      o << (e.notes.empty() ? "no report" : e.notes.back()) << '\n';
      continue;
    }
    const auto& r = *e.report;
    o << "darts " << r.darts << ", type (" << r.type.m << ", " << r.type.n << ", " << r.type.k << "), chi "
      << r.euler_char.to_string() << ", kappa ";
    if (r.kappa)
      o << *r.kappa << ", X " << (r.x_structure ? r.x_structure->describe() : "?");
    else
      o << ">= " << r.kappa_lower_bound;
    if (r.totally_chiral) o << ", totally chiral";
    o << '\n';
  }
  o << "nonexistence violations: " << c.nonexistence_violations.size() << '\n';
  return o.str();
}

std::string format_factor(const FactorVerdict& v, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["preconditions_met"] = v.preconditions_met;
    j["failed_precondition"] = v.failed_precondition.empty() ? ordered_json(nullptr) : ordered_json(v.failed_precondition);
    j["chirality_order"] = v.chirality_order;
    j["kernel_order"] = v.kernel_order;
    j["isomorphic"] = v.isomorphic;
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::Csv)
    return "preconditions_met,failed_precondition,chirality_order,kernel_order,isomorphic\n" +
           std::string(bool_text(v.preconditions_met)) + "," + csv_field(v.failed_precondition) + "," +
           std::to_string(v.chirality_order) + "," + std::to_string(v.kernel_order) + "," +
           bool_text(v.isomorphic) + "\n";
  if (!v.preconditions_met) return "preconditions not met: " + v.failed_precondition + "\n";
  return "|X(K v H^r)| = " + std::to_string(v.chirality_order) + ", |ker(Mon K -> Mon H)| = " +
         std::to_string(v.kernel_order) + ", isomorphic: " + yes_no(v.isomorphic) + "\n";
}

// ---------------------------------------------------------------------------
// CLI

namespace {

struct Loaded {
  Hypermap hypermap;
  std::string label;
};

Loaded load_operand(const std::string& text, const Budgets& budgets) {
  if (std::filesystem::is_regular_file(text)) return {read_hm(text), text};
  const FamilySpec spec = FamilySpec::parse(text);
  return {build_hypermap(spec, budgets).hypermap, spec.label()};
}

Loaded load_primary(const RunConfig& cfg) {
  if (!cfg.input.empty() && !cfg.family.empty()) throw ValidationError("give --input or --family, not both");
  if (!cfg.input.empty()) return {read_hm(cfg.input), cfg.input};
  if (cfg.family.empty()) throw ValidationError("missing --input or --family");
  const FamilySpec spec = FamilySpec::parse(cfg.family, cfg.params);
  return {build_hypermap(spec, cfg.budgets).hypermap, spec.label()};
}

std::string hypermap_output(const Hypermap& h, const RunConfig& cfg, const std::string& label) {
  if (cfg.format == OutputFormat::Text) return format_hm(h);
  return format_report(chirality_report(h, cfg.budgets), cfg.format, label);
}

std::string orthogonal_output(bool orthogonal, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return std::string("{\n  \"orthogonal\": ") + bool_text(orthogonal) + "\n}\n";
    case OutputFormat::Csv: return std::string("orthogonal\n") + bool_text(orthogonal) + "\n";
    case OutputFormat::Text: break;
  }
  return std::string(bool_text(orthogonal)) + "\n";
}

// Returns the exit code; budget exhaustion reported inside a result is 3.
int execute(const RunConfig& cfg, std::string& text) {
  const std::string& cmd = cfg.subcommand;
  int code = 0;
  if (cmd == "analyze") {
    const Loaded in = load_primary(cfg);
    const ChiralityReport report = chirality_report(in.hypermap, cfg.budgets);
    text = format_report(report, cfg.format, in.label);
    if (report.budget_exceeded) code = 3;
  } else if (cmd == "mirror") {
    const Loaded in = load_primary(cfg);
    text = hypermap_output(in.hypermap.mirror(), cfg, "mirror of " + in.label);
  } else if (cmd == "cover") {
    const Loaded in = load_primary(cfg);
    text = hypermap_output(smallest_reflexible_cover(in.hypermap, cfg.budgets), cfg, "cover of " + in.label);
  } else if (cmd == "quotient") {
    const Loaded in = load_primary(cfg);
    text = hypermap_output(largest_reflexible_quotient(in.hypermap, cfg.budgets), cfg, "quotient of " + in.label);
  } else if (cmd == "join" || cmd == "meet" || cmd == "orthogonal" || cmd == "factor-check") {
    const Loaded a = load_operand(cfg.a, cfg.budgets);
    const Loaded b = load_operand(cfg.b, cfg.budgets);
    if (cmd == "join")
      text = hypermap_output(join(a.hypermap, b.hypermap, cfg.budgets), cfg, a.label + " v " + b.label);
    else if (cmd == "meet")
      text = hypermap_output(meet(a.hypermap, b.hypermap, cfg.budgets), cfg, a.label + " ^ " + b.label);
    else if (cmd == "orthogonal")
      text = orthogonal_output(is_orthogonal(a.hypermap, b.hypermap, cfg.budgets), cfg.format);
    else
      text = format_factor(verify_factor_proposition(a.hypermap, b.hypermap, cfg.budgets), cfg.format);
  } else if (cmd == "scan") {
    const FamilySpec spec = FamilySpec::parse(cfg.group);
    ScanOptions options;
    options.mode = parse_scan_mode(cfg.mode);
    options.budget = cfg.budgets.scan;
    options.samples = cfg.samples;
    options.seed = cfg.seed;
    options.pair_budget = cfg.budgets.pairs;
    const ScanResult result = scan_group(build_group(spec, cfg.budgets), options, spec.label());
    text = format_scan(result, cfg.format);
    if (result.partial) code = 3;
  } else if (cmd == "census") {
    std::vector<FamilySpec> specs;
    for (const auto& s : cfg.specs) specs.push_back(FamilySpec::parse(s));
    if (specs.empty()) specs = default_census_specs();
    text = format_census(census(specs, cfg.budgets), cfg.format);
  } else {
    throw ValidationError("unknown subcommand " + cmd);
  }
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.budgets = budgets_from_environment();
  } catch (const ValidationError& e) {
    err << "error: validation: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Chirality of orientably regular hypermaps", "chirality_lab"};
  app.require_subcommand(1);
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out, "write output here instead of stdout");
    sub->add_option("--budget-group", cfg.budgets.group, "cap on enumerated group order")->check(CLI::PositiveNumber);
    sub->add_option("--budget-pairs", cfg.budgets.pairs, "cap on pair group order")->check(CLI::PositiveNumber);
    sub->add_option("--budget-cover", cfg.budgets.cover, "cap on materialized cover size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-iso", cfg.budgets.isomorphism, "cap on isomorphism test order")
        ->check(CLI::PositiveNumber);
  };
  auto single = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", cfg.input, ".hm file");
    sub->add_option("--family", cfg.family, "catalog family");
    sub->add_option("--params", cfg.params, "family parameters, k=v,...");
    common(sub);
    return sub;
  };
  auto binary = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--a", cfg.a, ".hm file or family:k=v,...")->required();
    sub->add_option("--b", cfg.b, ".hm file or family:k=v,...")->required();
    common(sub);
    return sub;
  };

  single("analyze", "chirality report");
  single("mirror", "mirror image");
  single("cover", "smallest reflexible cover");
  single("quotient", "largest reflexible quotient");
  binary("join", "least common cover");
  binary("meet", "greatest common quotient");
  binary("orthogonal", "transitivity of the product action");
  binary("factor-check", "X(K v H^r) against ker(Mon K -> Mon H)");

  CLI::App* scan = app.add_subcommand("scan", "generating pairs of a group");
  scan->add_option("--group", cfg.group, "family:k=v,...")->required();
  scan->add_option("--mode", cfg.mode, "strong-symmetry, witness or sampled")
      ->check(CLI::IsMember({"strong-symmetry", "witness", "sampled"}));
  scan->add_option("--budget", cfg.budgets.scan, "cap on pair checks")->check(CLI::PositiveNumber);
  scan->add_option("--samples", cfg.samples, "pairs drawn in sampled mode")->check(CLI::PositiveNumber);
  scan->add_option("--seed", cfg.seed, "sampling seed");
  common(scan);

  CLI::App* census_cmd = app.add_subcommand("census", "reports for a list of catalog entries");
  census_cmd->add_option("--spec", cfg.specs, "family:k=v,... (repeatable; default census when absent)");
  common(census_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = parse_format(format);

  try {
    std::string text;
    const int code = execute(cfg, text);
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw ValidationError("cannot write " + cfg.out);
      file << text;
    }
    if (code == 3) err << "error: budget: search stopped at its budget; result is partial\n";
    return code;
  } catch (const ValidationError& e) {
    err << "error: validation: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: budget: " << e.what() << "; explored=" << e.explored() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace chirality_lab
