// rectsaw: command-line front end.

#include "rectsaw/arith/critical.hpp"
#include "rectsaw/arith/eval.hpp"
#include "rectsaw/arith/exact.hpp"
#include "rectsaw/common/error.hpp"
#include "rectsaw/conformal/alpha.hpp"
#include "rectsaw/conformal/density.hpp"
#include "rectsaw/conformal/params.hpp"
#include "rectsaw/conformal/ratio.hpp"
#include "rectsaw/enumerator/enumerate.hpp"
#include "rectsaw/enumerator/serialize.hpp"
#include "rectsaw/series/export.hpp"
#include "rectsaw/series/extrapolate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace rectsaw;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kResource = 2, kNumerical = 3 };

struct RunConfig {
  int L = 0;
  int W = 0;
  std::string mode = "split";
  int aspect = 0;
  int n_min = 0;  // 0: per-aspect default
  int n_max = 0;
  std::string out;
  std::string format;
  std::string xc = "mnemonic";
  int threads = 1;
  unsigned precision = kDefaultDigits;
  int primes = 0;  // 0: enough for the degree
  std::string engine = "auto";
  double state_cap = static_cast<double>(kDefaultStateCap);
  std::string checkpoint_dir;
  std::string method;
  double theta = 1.0;
  std::string input;
  std::string table_dir;
  double kappa = 8.0 / 3.0;
  double r = 0;
  int samples = 0;
  std::string normalization = "endpoint-matched";
  std::string density_out;
};

std::string fmt(double v, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f)
    throw InvalidArgument("cannot write " + cfg.out);
  f << text;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a)
      return;
  throw InvalidArgument("format '" + format + "' not supported by this command");
}

std::size_t state_cap(const RunConfig& cfg) {
  if (!(cfg.state_cap >= 1))
    throw InvalidArgument("--state-cap must be at least 1");
  return static_cast<std::size_t>(cfg.state_cap);
}

ExactOptions exact_options(const RunConfig& cfg) {
  ExactOptions o;
  if (cfg.primes > 0)
    o.primes = PrimeSet::below_2_31(cfg.primes);
  o.threads = cfg.threads;
  o.state_cap = state_cap(cfg);
  o.checkpoint_dir = cfg.checkpoint_dir;
  return o;
}

const char* xc_source(CriticalSource s) {
  switch (s) {
    case CriticalSource::MnemonicRoot: return "mnemonic";
    case CriticalSource::Literature: return "literature";
    case CriticalSource::Given: return "given";
  }
  return "?";
}

// enumerate ---------------------------------------------------------------

std::string series_csv(const SeriesSet& set) {
  std::ostringstream out;
  out << "series,k,coefficient\n";
  for (const auto& [key, g] : set.series)
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
      out << key << "," << k << "," << g.coeffs()[k].str() << "\n";
  return out.str();
}

int cmd_enumerate(const RunConfig& cfg) {
  const Rectangle rect(cfg.L, cfg.W);
  const Mode mode = parse_mode(cfg.mode);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "text", "csv"});

  const auto options = exact_options(cfg);
  const SeriesSet set = mode == Mode::Split
                            ? series_set(rect, exact_boundary_split(rect, options))
                            : series_set(rect, exact_full_hitting(rect, options));
  if (format == "json")
    emit(cfg, to_json(set).dump(2) + "\n");
  else if (format == "text")
    emit(cfg, to_text(set));
  else
    emit(cfg, series_csv(set));
  return kOk;
}

// ratio-series ------------------------------------------------------------

int default_n_min(int aspect) { return aspect > 2 ? 4 : 2; }

RatioSequence ratio_series(const RunConfig& cfg, const BigFloat& x) {
  if (cfg.aspect < 1)
    throw InvalidArgument("--aspect must be a positive integer");
  const int n_min = cfg.n_min > 0 ? cfg.n_min : default_n_min(cfg.aspect);
  if (cfg.n_max < n_min)
    throw InvalidArgument("--n-max must be at least --n-min");
  RatioOptions options;
  options.engine = parse_engine(cfg.engine);
  options.threads = cfg.threads;
  options.state_cap = state_cap(cfg);
  return build_ratio_sequence(aspect_family(cfg.aspect, n_min, cfg.n_max), x, options);
}

std::string sequence_text(const RatioSequence& seq, int digits) {
  std::ostringstream out;
  for (const auto& e : seq.entries)
    out << e.n << " " << to_string(e.value, digits) << "\n";
  return out.str();
}

int cmd_ratio_series(const RunConfig& cfg) {
  ScopedPrecision guard(cfg.precision);
  const auto xc = parse_critical_point(cfg.xc, cfg.precision);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "csv", "text"});
  const auto seq = ratio_series(cfg, xc.x);
  const int digits = static_cast<int>(cfg.precision) - 10;
  if (format == "json") {
    ordered_json j = sequence_json(seq, digits);
    j["xc"] = xc_source(xc.source);
    emit(cfg, j.dump(2) + "\n");
  } else if (format == "csv") {
    emit(cfg, sequence_csv(seq, digits));
  } else {
    emit(cfg, sequence_text(seq, digits));
  }
  return kOk;
}

// fit-kappa ---------------------------------------------------------------

constexpr Method kAllMethods[] = {Method::BulirschStoer, Method::LevinU, Method::BrezinskiTheta,
                                  Method::Neville};

std::string table_path(const RunConfig& cfg, Method m) {
  fs::path dir;
  if (!cfg.table_dir.empty())
    dir = cfg.table_dir;
  else if (!cfg.out.empty())
    dir = fs::path(cfg.out).parent_path();
  else
    return {};
  fs::create_directories(dir.empty() ? fs::path(".") : dir);
  const std::string name = "fit-kappa-r" + std::to_string(cfg.aspect) + "-" + to_string(m) + ".csv";
  return (dir / name).string();
}

int cmd_fit_kappa(const RunConfig& cfg) {
  ScopedPrecision guard(cfg.precision);
  const auto xc = parse_critical_point(cfg.xc, cfg.precision);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "text"});
  const FitMethod fit_method =
      cfg.method.empty() ? (cfg.aspect > 2 ? FitMethod::Asymptotic : FitMethod::ExactIntegral)
                         : parse_fit_method(cfg.method);
  const Method primary = Method::BulirschStoer;

  const auto seq = ratio_series(cfg, xc.x);
  if (seq.size() < 2)
    throw InvalidArgument("fit-kappa needs at least two rectangles, got " +
                          std::to_string(seq.size()) + " (raise --n-max)");

  ordered_json report;
  report["aspect"] = cfg.aspect;
  report["n_min"] = seq.entries.front().n;
  report["n_max"] = seq.entries.back().n;
  report["xc"] = xc_source(xc.source);
  report["fit"] = to_string(fit_method);
  report["theta"] = cfg.theta;
  report["primary"] = to_string(primary);
  ordered_json methods = ordered_json::object();
  std::optional<FitResult> primary_fit;
  std::string primary_limit, primary_uncertainty;
  for (Method m : kAllMethods) {
    const Extrapolation ex = extrapolate(seq, m, cfg.theta, 2);
    const double limit = ex.estimate.value.convert_to<double>();
    ordered_json entry = extrapolation_json(ex);
    const std::string path = table_path(cfg, m);
    if (!path.empty()) {
      std::ofstream(path, std::ios::binary) << table_csv(ex.table);
      entry["table"] = path;
    } else {
      entry["table"] = nullptr;
    }
    try {
      const FitResult fit = fit_b(cfg.aspect, LongOverShort{limit}, fit_method);
      entry["b"] = fmt(fit.b);
      entry["kappa"] = fmt(fit.kappa);
      if (m == primary)
        primary_fit = fit;
    } catch (const NumericalFailure& e) {
      entry["b"] = nullptr;
      entry["kappa"] = nullptr;
      entry["fit_error"] = e.what();
      if (m == primary)
        throw;
    }
    if (m == primary) {
      primary_limit = to_string(ex.estimate.value, kTableDigits);
      primary_uncertainty = to_string(ex.estimate.uncertainty, 6);
    }
    methods[to_string(m)] = entry;
  }
  report["ratio_limit"] = primary_limit;
  report["uncertainty"] = primary_uncertainty;
  report["b"] = fmt(primary_fit->b);
  report["kappa"] = fmt(primary_fit->kappa);
  report["sequence"] = sequence_json(seq, kTableDigits);
  report["methods"] = methods;

  if (format == "json") {
    emit(cfg, report.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "aspect " << cfg.aspect << ", n = " << seq.entries.front().n << ".."
        << seq.entries.back().n << "\n";
    for (Method m : kAllMethods) {
      const auto& e = methods[to_string(m)];
      out << to_string(m) << ": limit " << e["limit"].get<std::string>() << " +- "
          << e["uncertainty"].get<std::string>() << " ("
          << e["direction"].get<std::string>() << ")";
      if (!e["kappa"].is_null())
        out << "  kappa " << e["kappa"].get<std::string>();
      out << "\n";
    }
    out << "kappa = " << fmt(primary_fit->kappa) << " (b = " << fmt(primary_fit->b) << ")\n";
    emit(cfg, out.str());
  }
  return kOk;
}

// density-compare ---------------------------------------------------------

std::vector<double> measured_density(const RunConfig& cfg, const Rectangle& rect,
                                     const BigFloat& x) {
  Engine engine = parse_engine(cfg.engine);
  if (engine == Engine::Auto)
    engine = rect.width() <= 10 && rect.max_degree() <= 300 ? Engine::Exact : Engine::Numeric;
  std::vector<double> out;
  if (engine == Engine::Exact) {
    const HittingTable table = exact_full_hitting(rect, exact_options(cfg));
    for (const auto& g : table.right)
      out.push_back(evaluate(g, x).convert_to<double>());
  } else {
    const auto point = evaluate_full_hitting<BigFloat>(rect, x, state_cap(cfg));
    for (const auto& v : point.right)
      out.push_back(v.convert_to<double>());
  }
  return out;
}

int cmd_density_compare(const RunConfig& cfg) {
  ScopedPrecision guard(cfg.precision);
  const Rectangle rect(cfg.L, cfg.W);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  require_format(format, {"csv", "json"});
  const auto xc = parse_critical_point(cfg.xc, cfg.precision);
  const double b = b_from_kappa(cfg.kappa);
  const auto measured = measured_density(cfg, rect, xc.x);
  const DensityComparison cmp = compare_density(rect.width(), rect.height(), measured, b);

  if (format == "csv") {
    std::ostringstream out;
    out << "cy,lattice_position,mapped_position,measured,predicted,relative_gap\n";
    for (const auto& row : cmp.rows)
      out << row.cy << "," << fmt(row.lattice_position) << "," << fmt(row.preimage) << ","
          << fmt(row.measured) << "," << fmt(row.predicted) << "," << fmt(row.relative_gap, 6)
          << "\n";
    emit(cfg, out.str());
  } else {
    ordered_json j;
    j["L"] = rect.width();
    j["W"] = rect.height();
    j["xc"] = xc_source(xc.source);
    j["r"] = cmp.r;
    j["alpha"] = fmt(cmp.alpha);
    j["b"] = fmt(cmp.b);
    j["max_relative_gap"] = fmt(cmp.max_relative_gap, 6);
    ordered_json rows = ordered_json::array();
    for (const auto& row : cmp.rows)
      rows.push_back({{"cy", row.cy},
                      {"lattice_position", fmt(row.lattice_position)},
                      {"mapped_position", fmt(row.preimage)},
                      {"measured", fmt(row.measured)},
                      {"predicted", fmt(row.predicted)},
                      {"relative_gap", fmt(row.relative_gap, 6)}});
    j["rows"] = rows;
    emit(cfg, j.dump(2) + "\n");
  }
  return kOk;
}

// predict -----------------------------------------------------------------

int cmd_predict(const RunConfig& cfg) {
  if (!(cfg.r >= 1))
    throw InvalidArgument("--r must be at least 1");
  if (!(cfg.kappa > 0))
    throw InvalidArgument("--kappa must be positive");
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  require_format(format, {"json", "text"});
  ScopedPrecision guard(cfg.precision);
  const int digits = static_cast<int>(cfg.precision) - 5;

  const double b = b_from_kappa(cfg.kappa);
  const BigFloat r = BigFloat(fmt(cfg.r, 17));
  const ConformalParams p = conformal_params(cfg.r, b);
  const ShortOverLong exact = ratio_exact_excess(p.alpha_minus_one, b);

  ordered_json j;
  j["r"] = cfg.r;
  j["kappa"] = fmt(cfg.kappa);
  j["b"] = fmt(b);
  j["alpha"] = to_string(alpha_from_aspect(r), digits);
  j["alpha_minus_one"] = to_string(alpha_minus_one(r), digits);
  j["alpha_asymptotic"] = to_string(alpha_asymptotic(r), digits);
  j["ratio_short_over_long"] = fmt(exact.value);
  j["ratio_long_over_short"] = fmt(exact.inverted().value);
  ordered_json asym = ordered_json::object();
  for (auto v : {AsymptoticVariant::Printed, AsymptoticVariant::Intro, AsymptoticVariant::Chain})
    asym[to_string(v)] = fmt(ratio_asymptotic(cfg.r, b, v).value);
  asym["leading"] = fmt(ratio_asymptotic(cfg.r, b, AsymptoticVariant::Printed, true).value);
  j["ratio_asymptotic"] = asym;

  if (cfg.samples > 0) {
    const auto curve =
        predicted_density_curve(cfg.r, b, cfg.samples, parse_normalization(cfg.normalization));
    if (cfg.density_out.empty())
      throw InvalidArgument("--samples needs --density-out");
    write_density_csv(curve, cfg.density_out);
    write_density_sidecar(curve, cfg.density_out + ".json");
    j["density"] = cfg.density_out;
  }

  if (format == "json") {
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& [k, v] : j.items())
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    emit(cfg, out.str());
  }
  return kOk;
}

// extrapolate -------------------------------------------------------------

int cmd_extrapolate(const RunConfig& cfg) {
  if (cfg.input.empty())
    throw InvalidArgument("--in is required");
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  require_format(format, {"csv", "json"});
  ScopedPrecision guard(cfg.precision);
  const auto seq = read_sequence(cfg.input, cfg.aspect);
  const Method m = parse_method(cfg.method.empty() ? "bulirsch-stoer" : cfg.method);
  const auto ex = extrapolate(seq, m, cfg.theta);
  if (format == "csv") {
    emit(cfg, table_csv(ex.table));
  } else {
    ordered_json j = extrapolation_json(ex);
    ordered_json cols = ordered_json::array();
    for (const auto& col : ex.table.columns) {
      ordered_json c = ordered_json::array();
      for (const auto& v : col)
        c.push_back(to_string(v, kTableDigits));
      cols.push_back(c);
    }
    j["table"] = cols;
    emit(cfg, j.dump(2) + "\n");
  }
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Output file (default stdout)");
  sub->add_option("--format", cfg.format, "json, csv or text");
  sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--precision", cfg.precision, "Working precision in decimal digits")
      ->check(CLI::Range(16u, 100000u));
  sub->add_option("--state-cap", cfg.state_cap, "Largest allowed state ensemble");
}

void add_xc(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--xc", cfg.xc, "mnemonic, literature or a decimal value");
}

void add_exact(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--primes", cfg.primes, "Number of primes (default: from the degree)")
      ->check(CLI::Range(0, 10000));
  sub->add_option("--checkpoint-dir", cfg.checkpoint_dir, "Directory for per-prime checkpoints");
}

void add_rectangle(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--L", cfg.L, "Short side")->required();
  sub->add_option("--W", cfg.W, "Long side")->required();
}

void add_family(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--aspect", cfg.aspect, "Aspect ratio W/L")->required();
  sub->add_option("--n-min", cfg.n_min, "Smallest short side (default 2, or 4 above aspect 2)");
  sub->add_option("--n-max", cfg.n_max, "Largest short side")->required();
  sub->add_option("--engine", cfg.engine, "exact, numeric or auto");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-avoiding walks crossing rectangles: enumeration and SLE predictions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* enumerate = app.add_subcommand("enumerate", "Exact generating functions for one rectangle");
  add_rectangle(enumerate, cfg);
  enumerate->add_option("--mode", cfg.mode, "split or full");
  add_common(enumerate, cfg);
  add_exact(enumerate, cfg);

  auto* ratio = app.add_subcommand("ratio-series", "Long/short hitting ratios at x_c");
  add_family(ratio, cfg);
  add_common(ratio, cfg);
  add_xc(ratio, cfg);

  auto* fit = app.add_subcommand("fit-kappa", "Extrapolate ratios and invert for kappa");
  add_family(fit, cfg);
  fit->add_option("--method", cfg.method, "exact or asymptotic (default by aspect)");
  fit->add_option("--theta", cfg.theta, "Correction exponent for Bulirsch-Stoer and Neville");
  fit->add_option("--table-dir", cfg.table_dir, "Where to write per-method tables");
  add_common(fit, cfg);
  add_xc(fit, cfg);

  auto* density = app.add_subcommand("density-compare", "Measured vs predicted long-side density");
  add_rectangle(density, cfg);
  density->add_option("--kappa", cfg.kappa, "SLE parameter for the prediction");
  density->add_option("--engine", cfg.engine, "exact, numeric or auto");
  add_common(density, cfg);
  add_xc(density, cfg);
  add_exact(density, cfg);

  auto* predict = app.add_subcommand("predict", "Conformal predictions for one aspect ratio");
  predict->add_option("--r", cfg.r, "Aspect ratio")->required();
  predict->add_option("--kappa", cfg.kappa, "SLE parameter");
  predict->add_option("--samples", cfg.samples, "Density samples to write");
  predict->add_option("--normalization", cfg.normalization, "endpoint-matched or unit-integral");
  predict->add_option("--density-out", cfg.density_out, "CSV path for the density curve");
  add_common(predict, cfg);

  auto* extrap = app.add_subcommand("extrapolate", "Extrapolation table for a ratio sequence");
  extrap->add_option("--in", cfg.input, "Sequence file (JSON or n,value CSV)")->required();
  extrap->add_option("--method", cfg.method, "bulirsch-stoer, levin-u, brezinski-theta, neville");
  extrap->add_option("--theta", cfg.theta, "Correction exponent");
  extrap->add_option("--aspect", cfg.aspect, "Aspect ratio for CSV input");
  add_common(extrap, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg);
    if (*ratio) return cmd_ratio_series(cfg);
    if (*fit) return cmd_fit_kappa(cfg);
    if (*density) return cmd_density_compare(cfg);
    if (*predict) return cmd_predict(cfg);
    if (*extrap) return cmd_extrapolate(cfg);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const InconsistentResidues& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
