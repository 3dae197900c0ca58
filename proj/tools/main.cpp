// etalab command-line front end: evaluation, curve tracing, figure data
// emission, zero scanning, winding census, and the verification battery.
//
// Exit codes: 0 success, 2 usage or domain error, 3 I/O error, 4 numerical
// failure, 5 verification failure.

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "etalab/curve.hpp"
#include "etalab/errors.hpp"
#include "etalab/eta.hpp"
#include "etalab/io.hpp"
#include "etalab/regions.hpp"
#include "etalab/verify.hpp"
#include "etalab/zeros.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitVerification = 5;

std::string format_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

ordered_json evaluation_json(const etalab::EtaEvaluation& ev) {
  return {{"re", ev.value.real()},
          {"im", ev.value.imag()},
          {"method", std::string(etalab::to_string(ev.method))},
          {"terms_used", ev.terms_used},
          {"error_estimate", ev.error_estimate}};
}

void print_evaluation(const std::string& label, const etalab::EtaEvaluation& ev) {
  std::cout << label << " = " << etalab::format_g17(ev.value.real()) << " + "
            << etalab::format_g17(ev.value.imag()) << "i\n"
            << "  method = " << etalab::to_string(ev.method) << ", terms = " << ev.terms_used
            << ", error_estimate = " << etalab::format_g17(ev.error_estimate) << "\n";
}

struct EvalArgs {
  double sigma = 0.0;
  double t = 0.0;
  double tolerance = 1e-10;
  int max_terms = 1'000'000;
  bool json = false;
  bool reflected = false;
  bool zeta = false;
  bool fe_residual = false;
};

int run_eval(const EvalArgs& args) {
  etalab::EvalConfig config;
  config.tolerance = args.tolerance;
  config.max_terms = args.max_terms;
  const std::complex<double> s{args.sigma, args.t};

  const auto ev = etalab::eta(s, config);
  ordered_json out;
  out["sigma"] = args.sigma;
  out["t"] = args.t;
  out["eta"] = evaluation_json(ev);
  if (!args.json) print_evaluation("eta(s)", ev);

  if (args.reflected) {
    const auto refl = etalab::eta_reflected(s, config);
    out["eta_reflected"] = evaluation_json(refl);
    if (!args.json) print_evaluation("eta(1-s)", refl);
  }
  if (args.zeta) {
    const auto z = etalab::zeta_from_eta(s, config);
    out["zeta"] = {{"re", z.real()}, {"im", z.imag()}};
    if (!args.json)
      std::cout << "zeta(s) = " << etalab::format_g17(z.real()) << " + "
                << etalab::format_g17(z.imag()) << "i\n";
  }
  if (args.fe_residual) {
    const double r = etalab::functional_equation_residual(s, config);
    out["functional_equation_residual"] = r;
    if (!args.json)
      std::cout << "functional_equation_residual = " << etalab::format_g17(r) << "\n";
  }
  if (args.json) std::cout << out.dump(2) << "\n";
  return 0;
}

struct TraceArgs {
  std::string family = "sigma";
  double value = 0.5;
  double t_min = 0.0;
  double t_max = 30.0;
  int samples = 601;
  std::string source = "eta";
  std::string out;
  bool json = false;
};

int run_trace(const TraceArgs& args) {
  const auto source = etalab::series_source_from_string(args.source);
  etalab::CurveTrace trace;
  if (args.family == "sigma") {
    trace = etalab::trace_sigma_curve(args.value, args.t_min, args.t_max, args.samples, source);
  } else if (args.family == "t") {
    trace = etalab::trace_t_curve(args.value, args.samples, source);
  } else {
    throw std::invalid_argument("trace: --family must be 'sigma' or 't'");
  }
  etalab::write_trace_csv(trace, args.out);
  if (args.json) {
    ordered_json out{{"file", args.out},
                     {"trace", trace.id()},
                     {"samples", static_cast<int>(trace.samples.size())}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "wrote " << trace.id() << " (" << trace.samples.size() << " samples) to "
              << args.out << "\n";
  }
  return 0;
}

struct FiguresArgs {
  int index = 1;
  std::string out_dir = ".";
  // dense enough that a sample falls within 1e-3 of the origin where a
  // critical-line zero sits inside the interval
  int samples = 8001;
  bool json = false;
};

int run_figures(const FiguresArgs& args) {
  const auto partition = etalab::default_step_partition();
  const double t_lo = partition[args.index - 1];
  const double t_hi = partition[args.index];
  const char letter = static_cast<char>('a' + args.index - 1);

  std::error_code ec;
  fs::create_directories(args.out_dir, ec);

  constexpr std::array<double, 5> kSigmas = {0.0, 0.25, 0.5, 0.75, 1.0};
  constexpr std::array<const char*, 5> kSigmaNames = {"0.0", "0.25", "0.5", "0.75", "1.0"};

  std::vector<std::string> files;
  for (std::size_t i = 0; i < kSigmas.size(); ++i) {
    const auto trace = etalab::trace_sigma_curve(kSigmas[i], t_lo, t_hi, args.samples,
                                                 etalab::SeriesSource::Eta);
    const std::string name = std::string("fig1") + letter + "_sigma" + kSigmaNames[i] + ".csv";
    etalab::write_trace_csv(trace, fs::path(args.out_dir) / name);
    files.push_back(name);
  }
  for (double beta : {t_lo, t_hi}) {
    const auto trace = etalab::trace_t_curve(beta, args.samples, etalab::SeriesSource::Eta);
    const std::string name =
        std::string("fig1") + letter + "_t" + format_short(beta) + ".csv";
    etalab::write_trace_csv(trace, fs::path(args.out_dir) / name);
    files.push_back(name);
  }

  if (args.json) {
    ordered_json out{{"index", args.index},
                     {"t_lo", t_lo},
                     {"t_hi", t_hi},
                     {"out_dir", args.out_dir},
                     {"files", files}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "wrote " << files.size() << " files for interval [" << format_short(t_lo) << ", "
              << format_short(t_hi) << "] to " << args.out_dir << "\n";
  }
  return 0;
}

struct ZerosArgs {
  double t_min = 0.0;
  double t_max = 30.0;
  double step = 0.01;
  double threshold = 0.1;
  double acceptance_residual = 1e-9;
  std::string out;
  bool json = false;
};

int run_zeros(const ZerosArgs& args) {
  etalab::EvalConfig config;
  etalab::ZeroCatalog catalog;
  catalog.metadata = {args.t_min, args.t_max, args.step, args.threshold, ""};

  const auto brackets =
      etalab::scan_critical_line(args.t_min, args.t_max, args.step, args.threshold, config);
  for (const auto& b : brackets)
    catalog.records.push_back(etalab::refine_zero_newton(0.5 * (b.t_lo + b.t_hi), config, 50,
                                                         args.acceptance_residual));
  for (const auto& r : etalab::sigma1_factor_zeros(args.t_max, config))
    if (r.t >= args.t_min) catalog.records.push_back(r);
  catalog.sort();
  etalab::save_catalog(catalog, args.out);

  int critical = 0, factor = 0;
  for (const auto& r : catalog.records)
    (r.kind == etalab::ZeroKind::CriticalLine ? critical : factor)++;
  if (args.json) {
    ordered_json out{{"critical_line", critical}, {"sigma1_factor", factor}, {"path", args.out}};
    ordered_json ts = ordered_json::array();
    for (const auto& r : catalog.records)
      ts.push_back({{"sigma", r.sigma}, {"t", r.t}, {"kind", std::string(to_string(r.kind))}});
    out["records"] = ts;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "critical-line zeros: " << critical << "\n"
              << "sigma1-factor zeros: " << factor << "\n"
              << "wrote " << args.out << "\n";
  }
  return 0;
}

struct CensusArgs {
  std::vector<double> rect;
  int samples_per_edge = 64;
  double window = 5.0;
  bool json = false;
};

int run_census(const CensusArgs& args) {
  const double sigma_lo = args.rect[0], sigma_hi = args.rect[1];
  const double t_lo = args.rect[2], t_hi = args.rect[3];
  etalab::EvalConfig config;

  int total = 0;
  double lo = t_lo;
  while (lo < t_hi) {
    const double hi = std::min(t_hi, lo + args.window);
    total += etalab::winding_number({sigma_lo, sigma_hi, lo, hi}, args.samples_per_edge, config);
    lo = hi;
  }
  if (args.json) {
    ordered_json out{{"rect", args.rect}, {"count", total}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << total << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string catalog;
  std::string out;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  etalab::VerifyConfig config;
  std::optional<fs::path> catalog_path;
  if (!args.catalog.empty()) catalog_path = args.catalog;

  const auto report = etalab::run_all(config, catalog_path);
  const std::string rendered = etalab::report_to_json(report);
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("verify: cannot open " + args.out);
    out << rendered << "\n";
  }
  if (args.json) {
    std::cout << rendered << "\n";
  } else {
    for (const auto& check : report.checks) {
      std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.check_name
                << " (max_residual = " << etalab::format_g17(check.max_residual)
                << ", threshold = " << etalab::format_g17(check.threshold) << ")";
      if (!check.note.empty()) std::cout << " -- " << check.note;
      std::cout << "\n";
    }
    std::cout << (report.all_passed ? "all checks passed" : "verification FAILED") << "\n";
  }
  return report.all_passed ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the alternating zeta function on the critical strip"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate eta(s) and related quantities");
  eval_cmd->add_option("--sigma", eval_args.sigma, "real part sigma")->required();
  eval_cmd->add_option("--t", eval_args.t, "imaginary part t")->required();
  eval_cmd->add_option("--tolerance", eval_args.tolerance, "target absolute error");
  eval_cmd->add_option("--max-terms", eval_args.max_terms, "series term cap");
  eval_cmd->add_flag("--json", eval_args.json, "machine-readable output");
  eval_cmd->add_flag("--reflected", eval_args.reflected, "also evaluate eta(1-s)");
  eval_cmd->add_flag("--zeta", eval_args.zeta, "also evaluate zeta(s) = eta(s)/(1-2^{1-s})");
  eval_cmd->add_flag("--fe-residual", eval_args.fe_residual,
                     "also evaluate the functional-equation residual");

  TraceArgs trace_args;
  auto* trace_cmd = app.add_subcommand("trace", "emit one curve trace as CSV");
  trace_cmd->add_option("--family", trace_args.family, "curve family: sigma or t")
      ->check(CLI::IsMember({"sigma", "t"}));
  trace_cmd->add_option("--value", trace_args.value, "fixed alpha or beta")->required();
  trace_cmd->add_option("--t-min", trace_args.t_min, "lower t (sigma family)");
  trace_cmd->add_option("--t-max", trace_args.t_max, "upper t (sigma family)");
  trace_cmd->add_option("--samples", trace_args.samples, "sample count")
      ->check(CLI::Range(2, 1'000'000));
  trace_cmd->add_option("--source", trace_args.source, "series: eta or eta-reflected")
      ->check(CLI::IsMember({"eta", "eta-reflected"}));
  trace_cmd->add_option("--out", trace_args.out, "output CSV path")->required();
  trace_cmd->add_flag("--json", trace_args.json, "print a JSON manifest");

  FiguresArgs figures_args;
  auto* figures_cmd = app.add_subcommand("figures", "emit the curve-family data for one interval");
  figures_cmd->add_option("--index", figures_args.index, "interval index 1..6")
      ->required()
      ->check(CLI::Range(1, 6));
  figures_cmd->add_option("--out-dir", figures_args.out_dir, "output directory");
  figures_cmd->add_option("--samples", figures_args.samples, "samples per curve")
      ->check(CLI::Range(2, 1'000'000));
  figures_cmd->add_flag("--json", figures_args.json, "print a JSON manifest");

  ZerosArgs zeros_args;
  auto* zeros_cmd = app.add_subcommand("zeros", "scan, refine and catalog zeros");
  zeros_cmd->add_option("--t-min", zeros_args.t_min, "scan start");
  zeros_cmd->add_option("--t-max", zeros_args.t_max, "scan end");
  zeros_cmd->add_option("--step", zeros_args.step, "scan step");
  zeros_cmd->add_option("--threshold", zeros_args.threshold, "detection threshold on |eta|");
  zeros_cmd->add_option("--acceptance-residual", zeros_args.acceptance_residual,
                        "required |eta| at a refined zero");
  zeros_cmd->add_option("--out", zeros_args.out, "catalog output path (JSON lines)")->required();
  zeros_cmd->add_flag("--json", zeros_args.json, "print a JSON summary");

  CensusArgs census_args;
  auto* census_cmd = app.add_subcommand("census", "argument-principle zero count in a rectangle");
  census_cmd
      ->add_option("--rect", census_args.rect, "sigma_lo sigma_hi t_lo t_hi")
      ->required()
      ->expected(4);
  census_cmd->add_option("--samples-per-edge", census_args.samples_per_edge,
                         "initial contour samples per edge")
      ->check(CLI::Range(1, 100'000));
  census_cmd->add_option("--window", census_args.window, "t-window size for contour splitting");
  census_cmd->add_flag("--json", census_args.json, "machine-readable output");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the full verification battery");
  verify_cmd->add_option("--catalog", verify_args.catalog, "zero catalog to cross-check");
  verify_cmd->add_option("--out", verify_args.out, "write the JSON report here");
  verify_cmd->add_flag("--json", verify_args.json, "print the JSON report to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (trace_cmd->parsed()) return run_trace(trace_args);
    if (figures_cmd->parsed()) return run_figures(figures_args);
    if (zeros_cmd->parsed()) return run_zeros(zeros_args);
    if (census_cmd->parsed()) return run_census(census_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const etalab::NonConvergence& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const etalab::RefinementFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const etalab::ContourTooClose& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const etalab::PartitionFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const etalab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const etalab::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
