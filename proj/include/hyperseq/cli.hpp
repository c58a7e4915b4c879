#ifndef HYPERSEQ_CLI_HPP
#define HYPERSEQ_CLI_HPP

// Command-line front end. run() is the whole program; main() only forwards.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperseq/analytic.hpp"
#include "hyperseq/identities/engine.hpp"
#include "hyperseq/opcalc.hpp"
#include "hyperseq/sequences.hpp"

namespace hyperseq::cli {

enum ExitCode { kOk = 0, kUsage = 2, kAuditFailures = 3, kDomain = 4, kIo = 5 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

/// Settings shared by file and flags. Flags win over the file.
struct CliConfig {
  std::optional<long> max_bound;
  std::map<std::string, long> bounds;
  std::optional<double> tolerance;
  std::optional<Format> format;
  std::optional<std::size_t> cap;
  std::optional<unsigned> workers;
  long series_cap = 512;
};

inline long parse_long(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw UsageError("'" + key + "' needs an integer, got '" + v + "'");
  return x;
}

inline long parse_positive(const std::string& key, const std::string& v) {
  long x = parse_long(key, v);
  if (x <= 0) throw UsageError("'" + key + "' must be positive");
  return x;
}

inline double parse_tolerance(const std::string& v) {
  std::size_t used = 0;
  double t = 0;
  try {
    t = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !(t > 0 && t < 1)) throw UsageError("tolerance must be a number in (0, 1)");
  return t;
}

/// Reads `key = value` lines; '#' starts a comment. Unknown keys are errors.
/// Keys: max, bound.<param>, tolerance, format, cap, workers, series_cap.
inline CliConfig load_config(std::istream& in, const std::string& origin) {
  CliConfig c;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    std::string where = origin + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string::npos) throw UsageError(where + "expected 'key = value'");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    try {
      if (key == "max") c.max_bound = parse_positive(key, value);
      else if (key.rfind("bound.", 0) == 0 && key.size() > 6) c.bounds[key.substr(6)] = parse_positive(key, value);
      else if (key == "tolerance") c.tolerance = parse_tolerance(value);
      else if (key == "format") c.format = parse_format(value);
      else if (key == "cap") c.cap = static_cast<std::size_t>(parse_positive(key, value));
      else if (key == "workers") c.workers = static_cast<unsigned>(parse_positive(key, value));
      else if (key == "series_cap") c.series_cap = parse_positive(key, value);
      else throw UsageError("unknown key '" + key + "'");
    } catch (const UsageError& e) {
      throw UsageError(where + e.what());
    }
  }
  return c;
}

inline CliConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  return load_config(in, path);
}

/// Integer parameter names used by registered domains, for the --<name> bound flags.
inline std::vector<std::string> bound_parameter_names() {
  std::set<std::string> names;
  for (const auto& id : registry())
    for (const auto& b : id.domain)
      for (const auto& p : b.params)
        if (p.kind == ParamKind::Range) names.insert(p.name);
  return {names.begin(), names.end()};
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

struct ComputeArgs {
  std::string sequence;
  std::optional<long> n, r, m, k;
  std::string w, x;
  std::string method = "CLOSED";
  std::optional<int> decimal;
};

inline const std::vector<std::string>& sequence_names() {
  static const std::vector<std::string> names = {"harmonic", "gen-harmonic", "hyperharmonic", "hyperharmonic-neg",
                                                 "hyperharmonic-q", "fibonacci", "alpha", "beta", "digamma"};
  return names;
}

inline long need(const std::optional<long>& v, const char* flag, const std::string& seq) {
  if (!v) throw UsageError(seq + " needs --" + flag);
  return *v;
}

inline std::string render_exact(const ExactRational& q, const std::optional<int>& decimal) {
  if (!decimal) return q.str();
  return to_decimal(q, *decimal) + " (rounded half-even, " + std::to_string(*decimal) + " places)";
}

inline std::string cmd_compute(const ComputeArgs& a) {
  const std::string& s = a.sequence;
  auto N = [&] { return need(a.n, "n", s); };
  auto R = [&] { return need(a.r, "r", s); };
  ExactRational v;
  if (s == "harmonic") v = harmonic(N());
  else if (s == "gen-harmonic") v = gen_harmonic(N(), need(a.m, "m", s));
  else if (s == "hyperharmonic") {
    HyperharmonicMethod method;
    try {
      method = parse_hyperharmonic_method(a.method);
    } catch (const ConstructionError& e) {
      throw UsageError(e.what());
    }
    v = hyperharmonic(N(), R(), method);
  } else if (s == "hyperharmonic-neg") v = hyperharmonic_neg(N(), R());
  else if (s == "hyperharmonic-q") {
    if (a.w.empty()) throw UsageError("hyperharmonic-q needs --w");
    v = hyperharmonic_rational_order(N(), ExactRational::parse(a.w));
  } else if (s == "fibonacci") v = ExactRational(fibonacci(need(a.k, "k", s)));
  else if (s == "alpha") v = alpha(N(), R());
  else if (s == "beta") v = beta(N(), R());
  else if (s == "digamma") {
    if (a.x.empty()) throw UsageError("digamma needs --x");
    return render(digamma(ExactRational::parse(a.x).to_double()));
  } else
    throw UsageError("unknown sequence '" + s + "'");
  return render_exact(v, a.decimal);
}

inline std::string cmd_series(const std::string& gf, std::optional<long> r, long order, long cap) {
  if (order < 0) throw UsageError("--order must be >= 0");
  if (order > cap) throw UsageError("--order " + std::to_string(order) + " exceeds the cap " + std::to_string(cap));
  PowerSeries ps(0);
  if (gf == "harmonic") ps = gf_harmonic(order);
  else if (gf == "hyperharmonic") ps = gf_hyperharmonic(need(r, "r", gf), order);
  else if (gf == "alpha") ps = gf_alpha(need(r, "r", gf), order);
  else if (gf == "beta") ps = gf_beta(need(r, "r", gf), order);
  else throw UsageError("unknown generating function '" + gf + "'");
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : ps.coefficients()) j.push_back(c.str());
  return j.dump() + "\n";
}

struct TableArgs {
  std::string sequence;
  long n_min = 1, n_max = 0, c_min = 1, c_max = 1;
  std::string format = "csv";
};

inline std::string cmd_table(const TableArgs& t) {
  const std::string& s = t.sequence;
  // Second index: r for the hyperharmonic family, alpha and beta; m for gen-harmonic.
  std::function<ExactRational(long, long)> f;
  std::string col = "r";
  bool single = false;
  if (s == "hyperharmonic") f = [](long n, long r) { return hyperharmonic(n, r); };
  else if (s == "hyperharmonic-neg") f = [](long n, long r) { return hyperharmonic_neg(n, r); };
  else if (s == "alpha") f = [](long n, long r) { return alpha(n, r); };
  else if (s == "beta") f = [](long n, long r) { return beta(n, r); };
  else if (s == "gen-harmonic") {
    f = [](long n, long m) { return gen_harmonic(n, m); };
    col = "m";
  } else if (s == "harmonic") {
    f = [](long n, long) { return harmonic(n); };
    single = true;
  } else if (s == "fibonacci") {
    f = [](long n, long) { return ExactRational(fibonacci(n)); };
    single = true;
  } else
    throw UsageError("table does not support sequence '" + s + "'");

  std::vector<long> cols;
  if (single) cols.push_back(0);
  else
    for (long c = t.c_min; c <= t.c_max; ++c) cols.push_back(c);
  std::vector<long> rows;
  for (long n = t.n_min; n <= t.n_max; ++n) rows.push_back(n);
  if (cols.empty()) rows.clear();

  std::vector<std::vector<std::string>> grid;
  for (long n : rows) {
    std::vector<std::string> line;
    for (long c : cols) line.push_back(f(n, c).str());
    grid.push_back(std::move(line));
  }

  Format fmt = parse_format(t.format);
  std::ostringstream out;
  if (fmt == Format::Json) {
    out << nlohmann::ordered_json(grid).dump() << '\n';
  } else if (fmt == Format::Csv) {
    out << "n";
    for (long c : cols) out << ',' << (single ? s : col + "=" + std::to_string(c));
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << rows[i];
      for (const auto& v : grid[i]) out << ',' << v;
      out << '\n';
    }
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << "n=" << rows[i] << ':';
      for (const auto& v : grid[i]) out << ' ' << v;
      out << '\n';
    }
  }
  return out.str();
}

/// Runs the program; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact harmonic and hyperharmonic number toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file (default: $HYPERSEQ_CONFIG)");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Evaluate one sequence value");
  compute->add_option("sequence", ca.sequence, "Sequence name")->required();
  compute->add_option("--n", ca.n, "Index n");
  compute->add_option("--r", ca.r, "Order r");
  compute->add_option("--m", ca.m, "Exponent m (gen-harmonic)");
  compute->add_option("--k", ca.k, "Index k (fibonacci, may be negative)");
  compute->add_option("--w", ca.w, "Rational order, e.g. 1/2 (hyperharmonic-q)");
  compute->add_option("--x", ca.x, "Rational argument (digamma)");
  compute->add_option("--method", ca.method, "DEF, CLOSED, CONV, REC_LOWER or REC_UPPER");
  compute->add_option("--decimal", ca.decimal, "Print as a decimal with this many places");

  std::vector<std::string> suites, only;
  std::optional<long> max_bound;
  std::map<std::string, std::optional<long>> param_bounds;
  std::string format_flag, out_path;
  std::optional<std::size_t> cap;
  std::optional<unsigned> workers;
  std::optional<double> tolerance;
  auto* audit = app.add_subcommand("audit", "Verify registered identities");
  audit->add_option("--suite", suites, "core, table1, table2 or float (repeatable; default all)")->delimiter(',');
  audit->add_option("--only", only, "Identity id or row number (repeatable)")->delimiter(',');
  audit->add_option("--max", max_bound, "Upper bound for every integer parameter");
  for (const auto& name : bound_parameter_names())
    audit->add_option("--" + name, param_bounds[name], "Upper bound for parameter " + name);
  audit->add_option("--format", format_flag, "json, csv or text");
  audit->add_option("--out", out_path, "Write the report here instead of stdout");
  audit->add_option("--cap", cap, "Counterexamples kept per identity");
  audit->add_option("--workers", workers, "Worker threads (default: hardware)");
  audit->add_option("--tolerance", tolerance, "Tolerance for floating-point identities");

  std::string gf;
  std::optional<long> gf_r;
  long order = 0;
  auto* series = app.add_subcommand("series", "Generating-function coefficients as a JSON array");
  series->add_option("--gf", gf, "harmonic, hyperharmonic, alpha or beta")->required();
  series->add_option("--r", gf_r, "Order r");
  series->add_option("--order", order, "Truncation order N")->required();

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Grid of values, rows n and columns r (or m)");
  table->add_option("sequence", ta.sequence, "Sequence name")->required();
  table->add_option("--n-min", ta.n_min, "First row");
  table->add_option("--n-max", ta.n_max, "Last row")->required();
  table->add_option("--r-min,--m-min", ta.c_min, "First column");
  table->add_option("--r-max,--m-max", ta.c_max, "Last column");
  table->add_option("--format", ta.format, "csv, json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    CliConfig cfg;
    if (config_path.empty())
      if (const char* env = std::getenv("HYPERSEQ_CONFIG"); env && *env) config_path = env;
    if (!config_path.empty()) cfg = load_config_file(config_path);

    if (*compute) {
      out << cmd_compute(ca) << '\n';
      return kOk;
    }
    if (*series) {
      out << cmd_series(gf, gf_r, order, cfg.series_cap);
      return kOk;
    }
    if (*table) {
      out << cmd_table(ta);
      return kOk;
    }

    // audit
    DomainBounds bounds;
    bounds.max_all = max_bound ? max_bound : cfg.max_bound;
    bounds.per_param = cfg.bounds;
    for (const auto& [name, v] : param_bounds)
      if (v) bounds.per_param[name] = *v;
    if (bounds.max_all && *bounds.max_all <= 0) throw UsageError("--max must be positive");
    for (const auto& [name, v] : bounds.per_param)
      if (v <= 0) throw UsageError("bound for '" + name + "' must be positive");

    AuditOptions opts;
    if (auto c = cap ? cap : cfg.cap) opts.counterexample_cap = *c;
    if (auto w = workers ? workers : cfg.workers) opts.workers = *w;
    if (tolerance) {
      if (!(*tolerance > 0 && *tolerance < 1)) throw UsageError("tolerance must be a number in (0, 1)");
      opts.float_tolerance = tolerance;
    } else {
      opts.float_tolerance = cfg.tolerance;
    }
    Format fmt = !format_flag.empty() ? parse_format(format_flag) : cfg.format.value_or(Format::Json);

    AuditReport report;
    try {
      report = run_suite(suites, bounds, opts, only);
    } catch (const LookupError& e) {
      throw UsageError(e.what());
    }
    if (report.identities.empty()) throw UsageError("no registered identity matches the selection");

    std::string text = fmt == Format::Json ? report.to_json().dump(2) + "\n"
                       : fmt == Format::Csv ? report.to_csv()
                                            : report.to_text();
    write_output(text, out_path, out);
    AuditSummary s = report.summary();
    // the text report already ends with this line
    if (fmt != Format::Text || !(out_path.empty() || out_path == "-"))
      err << s.total << " identities: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
    return report.has_failures() ? kAuditFailures : kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace hyperseq::cli

#endif  // HYPERSEQ_CLI_HPP
