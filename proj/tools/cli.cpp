#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "tfhankel/errors.hpp"
#include "tfhankel/hankel.hpp"
#include "tfhankel/oracle.hpp"
#include "tfhankel/pade.hpp"

#ifndef TFH_VERSION
#define TFH_VERSION "unknown"
#endif

namespace tfh::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad flags or flag combinations; carries a one-line fix.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& what, std::string fix) : std::runtime_error(what), fix_(std::move(fix)) {}
  const std::string& fix() const noexcept { return fix_; }

 private:
  std::string fix_;
};

constexpr int kLogDigits = 6;

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::optional<std::filesystem::path> cache_dir(const RunConfig& cfg) {
  if (cfg.cache_path) return cfg.cache_path;
  if (const char* env = std::getenv("TF_HANKEL_CACHE"); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

SeriesTable obtain_table(const RunConfig& cfg, int order, std::ostream& err) {
  const auto dir = cache_dir(cfg);
  if (dir) {
    try {
      if (auto hit = load_cached(*dir, cfg.equation, order)) {
        err << "series: loaded order " << order << " from cache " << dir->string() << '\n';
        return *std::move(hit);
      }
    } catch (const std::exception& e) {
      err << "warning: ignoring unreadable series cache (" << e.what() << ")\n";
    }
  }
  const Timer timer;
  SeriesTable table = expand(cfg.equation, order);
  err << "series: expanded to order " << order << " in " << timer.seconds() << " s\n";
  if (dir) {
    try {
      store_cached(*dir, table);
    } catch (const std::exception& e) {
      err << "warning: could not write series cache (" << e.what() << ")\n";
    }
  }
  return table;
}

int series_order_for(int d, int D_max) { return std::max(5, 2 * (D_max - 1) + d + 1); }

TrackOptions track_options(const RunConfig& cfg, int d) {
  TrackOptions o;
  o.d = d;
  o.D_max = cfg.D_max;
  o.precision = cfg.precision;
  return o;
}

int converged_digits(const RootSequence& seq) {
  const auto& last = seq.entries.back();
  if (!last.L) return 0;
  const double l = last.L->to_double();
  return std::clamp(static_cast<int>(std::floor(-l)), 0, seq.precision);
}

Json versions() {
  return Json{{"tfhankel", TFH_VERSION}, {"gmp", gmp_version}, {"mpfr", mpfr_get_version()}};
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  c["equation"] = std::string(to_string(cfg.equation));
  if (cfg.command == "oracle") {
    c["tol"] = cfg.tol;
    c["bracket"] = *cfg.bracket;
  } else {
    c["d"] = cfg.d;
    c["D_max"] = cfg.D_max;
    c["precision"] = cfg.precision;
  }
  if (cfg.command == "table") {
    c["pade"] = std::to_string(cfg.pade_M) + "/" + std::to_string(cfg.pade_N);
    c["x"] = cfg.xs;
    if (cfg.slope) c["slope"] = *cfg.slope;
  }
  c["digits"] = cfg.digits;
  return c;
}

Json metadata_json(const RunConfig& cfg) {
  return Json{{"precision", cfg.precision}, {"log_base", "10"}, {"versions", versions()}};
}

void emit(const RunConfig& cfg, std::ostream& out, const std::vector<std::string>& header,
          const std::vector<std::vector<std::optional<std::string>>>& rows, Json metadata) {
  if (cfg.output_format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << (row[i] ? csv_cell(*row[i]) : "");
      out << '\n';
    }
    return;
  }
  Json results = Json::array();
  for (const auto& row : rows) {
    Json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[header[i]] = row[i] ? Json(*row[i]) : Json(nullptr);
    results.push_back(std::move(r));
  }
  Json doc;
  doc["config"] = config_json(cfg);
  doc["results"] = std::move(results);
  doc["metadata"] = std::move(metadata);
  out << doc.dump(2) << '\n';
}

RootSequence run_sequence(const RunConfig& cfg, const SeriesTable& table, int d, std::ostream& err) {
  const Timer timer;
  RootSequence seq = track_sequence(table.truncated(series_order_for(d, cfg.D_max)), track_options(cfg, d));
  err << "hankel: " << to_string(cfg.equation) << " d=" << d << " D=2.." << cfg.D_max << " in " << timer.seconds()
      << " s\n";
  return seq;
}

int cmd_slope(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int d = cfg.d.front();
  const SeriesTable table = obtain_table(cfg, series_order_for(d, cfg.D_max), err);
  const RootSequence seq = run_sequence(cfg, table, d, err);

  std::vector<std::vector<std::optional<std::string>>> rows;
  for (const auto& e : seq.entries) {
    rows.push_back({std::to_string(e.D), std::to_string(d), e.s_root.to_string(cfg.digits), e.slope.to_string(cfg.digits),
                    e.L ? std::optional(e.L->to_string(kLogDigits)) : std::nullopt});
  }
  const int digits = converged_digits(seq);
  err << "slope estimate u'(0) = " << seq.entries.back().slope.to_string(cfg.digits) << " (about " << digits
      << " converged digits, from the final L)\n";

  Json meta = metadata_json(cfg);
  meta["estimate"] = Json{{"d", d}, {"slope", seq.entries.back().slope.to_string(cfg.digits)}, {"converged_digits", digits}};
  emit(cfg, out, {"D", "d", "s_root", "slope", "L_base10"}, rows, std::move(meta));
  return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int max_d = *std::max_element(cfg.d.begin(), cfg.d.end());
  const SeriesTable table = obtain_table(cfg, series_order_for(max_d, cfg.D_max), err);
  std::vector<std::vector<std::optional<std::string>>> rows;
  Json estimates = Json::array();
  for (int d : cfg.d) {
    const RootSequence seq = run_sequence(cfg, table, d, err);
    for (const auto& [D, L] : diagnostics(seq)) {
      rows.push_back({std::to_string(d), std::to_string(D), L.to_string(kLogDigits)});
    }
    estimates.push_back(Json{{"d", d},
                             {"slope", seq.entries.back().slope.to_string(cfg.digits)},
                             {"converged_digits", converged_digits(seq)}});
    err << "d=" << d << ": u'(0) = " << seq.entries.back().slope.to_string(cfg.digits) << " (about "
        << converged_digits(seq) << " converged digits)\n";
  }
  Json meta = metadata_json(cfg);
  meta["estimates"] = std::move(estimates);
  emit(cfg, out, {"d", "D", "L_base10"}, rows, std::move(meta));
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int work_digits = cfg.precision;
  BigFloat slope(work_digits);
  if (cfg.slope) {
    slope = BigFloat::parse(*cfg.slope, work_digits);
  } else {
    const int d = cfg.d.front();
    const SeriesTable table = obtain_table(cfg, series_order_for(d, cfg.D_max), err);
    const RootSequence seq = run_sequence(cfg, table, d, err);
    slope = seq.entries.back().slope;
    err << "table: using u'(0) = " << slope.to_string(cfg.digits) << " from H_" << cfg.D_max << "^" << d
        << " (about " << converged_digits(seq) << " converged digits)\n";
  }

  const PadeApproximant p = tf_pade(cfg.equation, slope, cfg.pade_M, cfg.pade_N);
  err << "pade: [" << p.M << "/" << p.N << "] matching residual " << p.matching_residual.to_string(3) << ", "
      << p.poles.size() << " real pole(s) on t >= 0";
  for (const auto& pole : p.poles) err << ' ' << pole.to_string(8) << " (x = " << (pole * pole).to_string(8) << ')';
  err << '\n';

  std::vector<BigFloat> xs;
  for (const auto& x : cfg.xs) xs.push_back(BigFloat::parse(x, work_digits));
  const auto table_rows = tf_table(p, xs);

  std::vector<std::vector<std::optional<std::string>>> rows;
  bool failed = false;
  for (std::size_t i = 0; i < table_rows.size(); ++i) {
    const auto& r = table_rows[i];
    failed = failed || !r.u;
    rows.push_back({cfg.xs[i], r.u ? std::optional(r.u->to_string(cfg.digits)) : std::nullopt,
                    r.u ? std::string("ok") : r.error});
  }

  Json meta = metadata_json(cfg);
  meta["slope_used"] = slope.to_string(cfg.digits);
  meta["pade"] = std::to_string(p.M) + "/" + std::to_string(p.N);
  Json poles = Json::array();
  for (const auto& pole : p.poles) poles.push_back(pole.to_string(cfg.digits));
  meta["poles_t"] = std::move(poles);
  emit(cfg, out, {"x", "u", "status"}, rows, std::move(meta));
  return failed ? kExitFailure : kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const BigFloat tol = BigFloat::parse(cfg.tol, 20);
  const BigFloat lo = BigFloat::parse(cfg.bracket->at(0), 20);
  const BigFloat hi = BigFloat::parse(cfg.bracket->at(1), 20);
  const Timer timer;
  const BigFloat slope = shoot_slope(cfg.equation, lo, hi, tol);
  err << "oracle: shooting converged in " << timer.seconds() << " s\n";
  // Only the decimals the bracket width supports.
  const int decimals = std::clamp(static_cast<int>(std::floor(-log10(tol).to_double())), 0, cfg.digits);
  std::vector<std::vector<std::optional<std::string>>> rows{
      {std::string(to_string(cfg.equation)), slope.to_fixed(decimals), cfg.tol, cfg.bracket->at(0),
       cfg.bracket->at(1)}};
  Json meta = metadata_json(cfg);
  meta.erase("precision");
  emit(cfg, out, {"equation", "slope", "tol", "bracket_lo", "bracket_hi"}, rows, std::move(meta));
  return kExitOk;
}

void validate(RunConfig& cfg) {
  if (cfg.command != "oracle") {
    for (int d : cfg.d) {
      if (d < kMinOffset || d > kMaxOffset) {
        throw UsageError("--d " + std::to_string(d) + " is out of range: Hankel sequences need d >= 3 because f_4 is "
                         "the first coefficient that depends on the slope (accepted range 3..6)",
                         "pass --d 3, 4, 5 or 6");
      }
    }
    if (cfg.command != "converge" && cfg.d.size() != 1) {
      throw UsageError("--d may be given only once for '" + cfg.command + "'",
                       "use the 'converge' subcommand to compare several d values");
    }
    if (cfg.D_max < 3) throw UsageError("--D-max must be >= 3", "pass --D-max 15");
    if (cfg.precision < kMinDigits) {
      throw UsageError("--precision must be >= " + std::to_string(kMinDigits) + " digits",
                       "pass --precision 50");
    }
  }
  if (cfg.digits < 1) throw UsageError("--digits must be >= 1", "pass --digits 20");
  if (cfg.command == "table") {
    if (!(cfg.pade_M < cfg.pade_N)) {
      throw UsageError("--pade " + std::to_string(cfg.pade_M) + "/" + std::to_string(cfg.pade_N) +
                       " needs M < N so that u(x) decays at large x",
                       "pass --pade 5/8");
    }
    for (const auto& x : cfg.xs) {
      bool ok = true;
      try {
        ok = BigFloat::parse(x, kMinDigits).sign() >= 0;
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      if (!ok) throw UsageError("--x value '" + x + "' is not a non-negative decimal", "pass --x 1,5,10,20,50,100");
    }
    if (cfg.slope) {
      try {
        BigFloat::parse(*cfg.slope, kMinDigits);
      } catch (const std::invalid_argument&) {
        throw UsageError("--slope '" + *cfg.slope + "' is not a decimal number", "pass --slope -1.588071022611375313");
      }
    }
  }
  if (cfg.command == "oracle") {
    if (!cfg.bracket) {
      cfg.bracket = cfg.equation == EquationKind::Atom ? std::vector<std::string>{"-2", "-1"}
                                                       : std::vector<std::string>{"-2", "-0.5"};
    }
    if (cfg.bracket->size() != 2) throw UsageError("--bracket takes exactly two values", "pass --bracket -2,-1");
    try {
      if (BigFloat::parse(cfg.tol, 20).sign() <= 0) throw std::invalid_argument("non-positive");
    } catch (const std::invalid_argument&) {
      throw UsageError("--tol '" + cfg.tol + "' is not a positive decimal", "pass --tol 1e-10");
    }
    for (const auto& b : *cfg.bracket) {
      try {
        BigFloat::parse(b, 20);
      } catch (const std::invalid_argument&) {
        throw UsageError("--bracket value '" + b + "' is not a decimal", "pass --bracket -2,-1");
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string equation = "atom";
  std::string format = "csv";
  std::string pade = "5/8";
  std::string cache;
  std::vector<int> d_values;
  std::vector<std::string> xs;
  std::vector<std::string> bracket;
  std::string slope;

  CLI::App app{"Thomas-Fermi slope at the origin by Hankel determinants, and u(x) by Pade approximants"};
  app.name(argv.empty() ? "tf_hankel" : std::filesystem::path(argv.front()).filename().string());
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--equation", equation, "atom | magnetic")->check(CLI::IsMember({"atom", "magnetic"}));
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", cfg.digits, "significant digits printed");
  };
  auto hankel_flags = [&](CLI::App* sub, bool repeatable_d) {
    auto* opt = sub->add_option("--d", d_values, "Hankel offset d (3..6)");
    if (!repeatable_d) opt->expected(1);
    sub->add_option("--D-max", cfg.D_max, "largest Hankel dimension D");
    sub->add_option("--precision", cfg.precision, "root refinement precision in decimal digits");
    sub->add_option("--cache", cache, "series cache directory (default: $TF_HANKEL_CACHE)");
  };

  auto* slope_cmd = app.add_subcommand("slope", "root sequence f_2^[D,d] and slope estimates for one d");
  common(slope_cmd);
  hankel_flags(slope_cmd, false);

  auto* table_cmd = app.add_subcommand("table", "u(x) from the [M/N] Pade approximant");
  common(table_cmd);
  hankel_flags(table_cmd, false);
  table_cmd->add_option("--pade", pade, "approximant orders M/N");
  table_cmd->add_option("--x", xs, "comma-separated x values")->delimiter(',');
  table_cmd->add_option("--slope", slope, "use this u'(0) instead of computing it");

  auto* converge_cmd = app.add_subcommand("converge", "convergence diagnostic L_{D,d} for one or more d");
  common(converge_cmd);
  hankel_flags(converge_cmd, true);

  auto* oracle_cmd = app.add_subcommand("oracle", "slope by shooting on the integrated equation");
  common(oracle_cmd);
  oracle_cmd->add_option("--tol", cfg.tol, "bracket width at which bisection stops");
  oracle_cmd->add_option("--bracket", bracket, "slope bracket lo,hi")->delimiter(',');

  try {
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "fix: run '" << app.get_name() << " <slope|table|converge|oracle> --help' for the accepted flags\n";
    return kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.equation = *parse_equation(equation);
    cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!d_values.empty()) {
      cfg.d = d_values;
    } else if (cfg.command == "converge") {
      cfg.d = {4, 5};
    }
    if (!cache.empty()) cfg.cache_path = cache;
    if (!xs.empty()) cfg.xs = xs;
    if (!bracket.empty()) cfg.bracket = bracket;
    if (!slope.empty()) cfg.slope = slope;
    const auto slash = pade.find('/');
    try {
      if (slash == std::string::npos) throw std::invalid_argument("no slash");
      std::size_t used = 0;
      cfg.pade_M = std::stoi(pade.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("M");
      const std::string n_text = pade.substr(slash + 1);
      cfg.pade_N = std::stoi(n_text, &used);
      if (used != n_text.size() || cfg.pade_M < 0) throw std::invalid_argument("N");
    } catch (const std::logic_error&) {
      throw UsageError("--pade '" + pade + "' is not of the form M/N", "pass --pade 5/8");
    }
    validate(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << "fix: " << e.fix() << '\n';
    return kExitUsage;
  }

  try {
    if (cfg.command == "slope") return cmd_slope(cfg, out, err);
    if (cfg.command == "table") return cmd_table(cfg, out, err);
    if (cfg.command == "converge") return cmd_converge(cfg, out, err);
    return cmd_oracle(cfg, out, err);
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace tfh::cli
