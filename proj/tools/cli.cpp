#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlog/errors.hpp"
#include "hlog/space_norms.hpp"
#include "hlog/sup_search.hpp"
#include "hlog/verification.hpp"

#ifndef HLOG_VERSION
#define HLOG_VERSION "unknown"
#endif

namespace hlog::cli {
namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  } visitor;
  return std::visit(visitor, cell);
}

Json json_cell(const Cell& cell) {
  struct {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(double v) const {
      // JSON has no inf/nan literals.
      if (!std::isfinite(v)) return format_double(v);
      return v;
    }
    Json operator()(long long v) const { return v; }
    Json operator()(bool v) const { return v; }
    Json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, cell);
}

std::string alpha_list(const std::vector<double>& alphas) {
  std::string out;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (i) out += ' ';
    out += format_double(alphas[i]);
  }
  return out;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["tolerance"] = c.tolerance;
  j["truncation"] = c.truncation;
  j["alpha_grid"] = c.alpha_grid;
  j["seed"] = c.seed;
  j["points"] = c.points;
  return j;
}

void emit(const std::string& command, const Table& table, const RunConfig& config, std::ostream& out) {
  if (config.output_format == OutputFormat::Json) {
    Json doc;
    doc["version"] = HLOG_VERSION;
    doc["command"] = command;
    doc["config"] = config_json(config);
    doc["columns"] = table.columns;
    Json rows = Json::array();
    for (const auto& row : table.rows) {
      Json r = Json::array();
      for (const auto& cell : row) r.push_back(json_cell(cell));
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# hlog " << HLOG_VERSION << '\n';
  out << "# command: " << command << '\n';
  out << "# tolerance=" << format_double(config.tolerance) << " truncation=" << config.truncation
      << " seed=" << config.seed << " points=" << config.points
      << " alpha_grid=" << alpha_list(config.alpha_grid) << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

std::string registry_names(const std::vector<RegistryEntry>& registry) {
  std::string out;
  for (const auto& e : registry) out += (out.empty() ? "" : ", ") + e.name;
  return out;
}

// ---- curves ----

double inner_tol(const RunConfig& c) { return 0.01 * c.tolerance; }

// Uniform grid in x = -log(1-r) on [0, x_max]; rows carry r.
Table unit_curve(const RunConfig& c, double x_max, const std::function<double(double r, double s)>& g) {
  Table t{{"r", "value"}, {}};
  for (std::size_t i = 0; i < c.points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(c.points - 1);
    const double s = std::exp(-x);
    const double r = -std::expm1(-x);
    t.rows.push_back({r, g(r, s)});
  }
  return t;
}

Table halfline_curve(const RunConfig& c, double x_max, double (*g)(double)) {
  Table t{{"x", "value"}, {}};
  for (std::size_t i = 0; i < c.points; ++i) {
    const double x = x_max * static_cast<double>(i) / static_cast<double>(c.points - 1);
    t.rows.push_back({x, g(x)});
  }
  return t;
}

Table make_curve(const std::string& name, const RunConfig& c) {
  if (name == "A-objective") {
    return unit_curve(c, kNormSearchDepth, [&](double r, double s) { return a_objective(r, s, inner_tol(c)); });
  }
  if (name == "B-objective") {
    return unit_curve(c, kNormSearchDepth, [&](double r, double s) { return b_objective(r, s, inner_tol(c)); });
  }
  if (name == "h1-g") return halfline_curve(c, 40.0, h1_g);
  if (name == "hinf-g") return halfline_curve(c, 40.0, hinf_g);
  if (name == "hinf-objective") return unit_curve(c, kNormSearchDepth, hinf_objective);
  if (name == "alpha-bounds") {
    Table t{{"alpha", "lower", "upper"}, {}};
    for (std::size_t i = 1; i < c.points; ++i) {
      const double a = 1.0 + static_cast<double>(i) / static_cast<double>(c.points);
      t.rows.push_back({a, alpha_lower_closed_form(a), alpha_upper_closed_form(a)});
    }
    return t;
  }
  throw UsageError("unknown curve '" + name + "'; valid curves: " + registry_names(curve_registry()));
}

// ---- tables ----

std::string alpha_space(const char* base, double a, bool log_weighted) {
  return std::string(base) + format_double(a) + (log_weighted ? "_log" : "");
}

Table make_table(const std::string& name, const RunConfig& c) {
  if (name == "norm-summary") {
    Table t{{"source", "target", "lower", "upper", "exact"}, {}};
    const CheckReport bloch = norm_bloch_to_blochlog(c.tolerance);
    double witness = bloch.computed;
    for (const auto& sub : bloch.subchecks) {
      if (sub.name == "witness-H1") witness = sub.computed;
    }
    t.rows.push_back({std::string("B"), std::string("B_log"), witness, bloch.computed, 1.5});
    const CheckReport hinf = hinf_norm(c.tolerance);
    t.rows.push_back({std::string("H^inf"), std::string("H^inf_log"), hinf.computed, hinf.computed, 1.0});
    t.rows.push_back({std::string("H^1"), std::string("H^1_log"), std::numbers::pi, 2.0 * std::numbers::pi,
                      std::monostate{}});
    for (double a : c.alpha_grid) {
      t.rows.push_back({alpha_space("B^", a, false), alpha_space("B^", a, true), alpha_lower_closed_form(a),
                        alpha_upper_closed_form(a), std::monostate{}});
    }
    return t;
  }
  if (name == "ic-bounds") {
    Table t{{"c", "r", "scaled", "lower", "upper", "holds"}, {}};
    for (double cc : {-0.7, -0.5, -0.3, 0.0, 0.3, 0.5, 0.7}) {
      for (double r : {0.1, 0.5, 0.9, 0.99}) {
        const IcBand band = i_c_band(cc, r, inner_tol(c));
        t.rows.push_back({cc, r, band.scaled, band.lower, band.upper, band.holds()});
      }
    }
    return t;
  }
  if (name == "unboundedness") {
    Table t{{"alpha", "j", "r", "value"}, {}};
    for (double a : {0.5, 2.0, 2.5}) {
      const GrowthWitness w = unboundedness_growth(a);
      for (std::size_t j = 0; j < w.values.size(); ++j) {
        t.rows.push_back({a, static_cast<long long>(j + 1), w.abscissae[j], w.values[j]});
      }
    }
    return t;
  }
  throw UsageError("unknown table '" + name + "'; valid tables: " + registry_names(table_registry()));
}

// ---- verify ----

void flatten(const CheckReport& r, const std::string& prefix, Table& t) {
  const std::string name = prefix.empty() ? r.name : prefix + "/" + r.name;
  t.rows.push_back({name, r.computed, r.target_lo, r.target_hi, r.tolerance,
                    std::string(r.passed ? "pass" : "fail"), r.detail});
  for (const auto& sub : r.subchecks) flatten(sub, name, t);
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw UsageError("unknown output format '" + s + "'; expected csv or json");
}

}  // namespace

const std::vector<RegistryEntry>& curve_registry() {
  static const std::vector<RegistryEntry> registry{
      {"A-objective", "(1+r) int_0^1 t/(1-(1-t)r) dt / log(e/(1-r)^2); 1 + its sup is A = 3/2"},
      {"B-objective", "(1+r) h(r) / log(e/(1-r)^2); log 2 + half its sup is B"},
      {"h1-g", "x e^x / ((e^x - 1)(1 + x)) on [0, 40]"},
      {"hinf-g", "x / ((1 - e^-x)(1 + 2x)) on [0, 40]"},
      {"hinf-objective", "(x/r) / (1 + 2x), x = -log(1-r)"},
      {"alpha-bounds", "lower and upper bounds of the alpha-Bloch norm for 1 < alpha < 2"},
  };
  return registry;
}

const std::vector<RegistryEntry>& table_registry() {
  static const std::vector<RegistryEntry> registry{
      {"norm-summary", "source space, target space, lower bound, upper bound, exact value"},
      {"ic-bounds", "scaled I_c against its band on the (c, r) grid"},
      {"unboundedness", "growth witnesses at r_j = 1 - 2^-j for alpha in {0.5, 2, 2.5}"},
  };
  return registry;
}

void validate(const RunConfig& c) {
  if (!(c.tolerance > 0.0) || !std::isfinite(c.tolerance)) {
    throw std::invalid_argument("tolerance must be positive and finite");
  }
  if (c.truncation < 16) throw std::invalid_argument("truncation must be at least 16");
  if (c.points < 2) throw std::invalid_argument("points must be at least 2");
  for (double a : c.alpha_grid) {
    if (!(a >= 1.0 + kAlphaGuard && a <= 2.0 - kAlphaGuard)) {
      throw std::invalid_argument("alpha_grid values must lie in [" + format_double(1.0 + kAlphaGuard) +
                                  ", " + format_double(2.0 - kAlphaGuard) + "]");
    }
  }
}

void apply_config_file(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "tolerance") {
        c.tolerance = value.get<double>();
      } else if (key == "truncation") {
        c.truncation = value.get<std::size_t>();
      } else if (key == "alpha_grid") {
        c.alpha_grid = value.get<std::vector<double>>();
      } else if (key == "output_format") {
        c.output_format = parse_format(value.get<std::string>());
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "points") {
        c.points = value.get<std::size_t>();
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::type_error& e) {
    throw std::invalid_argument(std::string("config file has a field of the wrong type: ") + e.what());
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  SuiteConfig suite;
  suite.tolerance = config.tolerance;
  suite.truncation = config.truncation;
  suite.alpha_grid = config.alpha_grid;
  suite.seed = config.seed;

  Table t{{"check", "computed", "target_lo", "target_hi", "tolerance", "status", "detail"}, {}};
  int failed = 0;
  int total = 0;
  bool non_convergence = false;
  for (const auto& entry : default_suite(suite)) {
    ++total;
    const auto start = std::chrono::steady_clock::now();
    try {
      const CheckReport report = entry.run();
      flatten(report, "", t);
      if (!report.passed) ++failed;
    } catch (const NonConvergenceError& e) {
      non_convergence = true;
      ++failed;
      t.rows.push_back({entry.name, std::monostate{}, std::monostate{}, std::monostate{}, config.tolerance,
                        std::string("error"), std::string(e.what())});
    } catch (const std::exception& e) {
      ++failed;
      t.rows.push_back({entry.name, std::monostate{}, std::monostate{}, std::monostate{}, config.tolerance,
                        std::string("error"), std::string(e.what())});
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f", elapsed.count());
    err << entry.name << ": " << seconds << " s\n";
  }
  emit("verify", t, config, out);
  err << (total - failed) << " of " << total << " checks passed\n";
  if (non_convergence) return kExitNonConvergence;
  return failed ? kExitCheckFailure : kExitOk;
}

int cmd_curve(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream&) {
  emit("curve " + name, make_curve(name, config), config, out);
  return kExitOk;
}

int cmd_table(const std::string& name, const RunConfig& config, std::ostream& out, std::ostream&) {
  emit("table " + name, make_table(name, config), config, out);
  return kExitOk;
}

int cmd_list(std::ostream& out) {
  out << "curves:\n";
  for (const auto& e : curve_registry()) out << "  " << e.name << "  " << e.description << '\n';
  out << "tables:\n";
  for (const auto& e : table_registry()) out << "  " << e.name << "  " << e.description << '\n';
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for the Hilbert matrix operator on log-weighted spaces", "hlog"};
  app.set_version_flag("--version", HLOG_VERSION);
  app.require_subcommand(1);

  std::string config_path;
  double tol = 0.0;
  std::size_t trunc = 0;
  std::uint64_t seed = 0;
  std::vector<double> alphas;
  std::string format;
  std::size_t points = 0;
  std::string name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);
    sub->add_option("--tol", tol, "tolerance (default 1e-8)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* verify = app.add_subcommand("verify", "run every check; exit 0 iff all pass");
  add_common(verify);
  verify->add_option("--trunc", trunc, "matrix truncation order (default 2048)");
  verify->add_option("--seed", seed, "seed for randomized inputs");
  verify->add_option("--alpha", alphas, "alpha values for the alpha-Bloch bounds (default 1.5)");

  CLI::App* curve = app.add_subcommand("curve", "emit a curve");
  add_common(curve);
  curve->add_option("name", name, "curve name (see list)")->required();
  curve->add_option("--points", points, "number of rows (default 512)");

  CLI::App* table = app.add_subcommand("table", "emit a table");
  add_common(table);
  table->add_option("name", name, "table name (see list)")->required();
  table->add_option("--alpha", alphas, "alpha values for the alpha-Bloch row");

  CLI::App* list = app.add_subcommand("list", "list curve and table names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (list->parsed()) return cmd_list(out);

  CLI::App* active = verify->parsed() ? verify : curve->parsed() ? curve : table;
  RunConfig config;
  try {
    if (!config_path.empty()) apply_config_file(config_path, config);
    auto given = [&](const char* flag) {
      try {
        return active->get_option(flag)->count() > 0;
      } catch (const CLI::OptionNotFound&) {
        return false;
      }
    };
    if (given("--tol")) config.tolerance = tol;
    if (given("--trunc")) config.truncation = trunc;
    if (given("--seed")) config.seed = seed;
    if (given("--alpha")) config.alpha_grid = alphas;
    if (given("--format")) config.output_format = parse_format(format);
    if (given("--points")) config.points = points;
    validate(config);

    if (active == verify) return cmd_verify(config, out, err);
    if (active == curve) return cmd_curve(name, config, out, err);
    return cmd_table(name, config, out, err);
  } catch (const std::invalid_argument& e) {
    err << "hlog: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonConvergenceError& e) {
    err << "hlog: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "hlog: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

}  // namespace hlog::cli
