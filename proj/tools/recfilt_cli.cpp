// recfilt: command-line front end for recursive-filter analysis.
//
// Exit codes: 0 success (a verifier reporting false is still success),
// 2 usage or parse error, 3 numerical error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "recfilt/associated_lti.hpp"
#include "recfilt/error.hpp"
#include "recfilt/io.hpp"
#include "recfilt/random.hpp"
#include "recfilt/recursive_filter.hpp"
#include "recfilt/spectral.hpp"
#include "recfilt/ztransform.hpp"

namespace {

using namespace recfilt;
using io::Json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string alpha;
  std::string filter_file;
  std::string init;
  std::string init_file;
  std::string x;
  std::string x_file;
  std::string window;
  double tol = kDefaultCheckTolerance;
  std::string format;
  std::string out;
  std::uint64_t seed = 0;

  // Command-specific.
  std::size_t length = 16;
  std::size_t points = 256;
  double f = 0.0;
  double settle_tol = 1e-3;
  Index kcap = 1000;
  bool corrupt = false;
};

Json read_json_file(const std::string& path, std::string_view field) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, std::string(field) + ": cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string(field) + ": " + e.what());
  }
}

RecursiveFilter load_filter(const RunConfig& cfg) {
  if (!cfg.filter_file.empty()) return io::filter_from_json(read_json_file(cfg.filter_file, "filter"));
  if (cfg.alpha.empty()) throw Error(ErrorCode::InvalidArgument, "alpha: required (--alpha or --filter-file)");
  try {
    return RecursiveFilter(io::parse_complex_list(cfg.alpha));
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("alpha: ") + e.detail());
  }
}

Initialization load_init(const RunConfig& cfg, const RecursiveFilter& filter) {
  if (!cfg.init_file.empty()) return io::init_from_json(read_json_file(cfg.init_file, "init"));
  if (cfg.init.empty()) return Initialization::zeros(filter.order());
  ComplexVector v = io::parse_complex_list(cfg.init);
  // A single value initialises every past sample.
  if (v.size() == 1) v.assign(filter.order(), v.front());
  if (v.size() != filter.order()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("init: expected {} values, got {}", filter.order(), v.size()));
  }
  return Initialization(std::move(v));
}

FiniteSignal load_x(const RunConfig& cfg) {
  if (!cfg.x_file.empty()) return io::signal_from_json(read_json_file(cfg.x_file, "x"));
  return io::parse_inline_signal(cfg.x);
}

Window load_window(const RunConfig& cfg, const Window& fallback) {
  return cfg.window.empty() ? fallback : io::parse_window(cfg.window);
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  const std::string fmt = cfg.format.empty() ? fallback : cfg.format;
  if (fmt != "json" && fmt != "csv") throw Error(ErrorCode::InvalidArgument, "format: expected json or csv");
  return fmt;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "out: cannot open " + cfg.out);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string samples_csv(const Window& w, const FiniteSignal& s) {
  std::ostringstream os;
  os << "k,re,im\n";
  for (Index k = w.kmin(); k <= w.kmax(); ++k) os << fmt::format("{},{},{}\n", k, s(k).real(), s(k).imag());
  return os.str();
}

Json window_record(const Window& w, const FiniteSignal& s) {
  Json samples = Json::array();
  for (Index k = w.kmin(); k <= w.kmax(); ++k) samples.push_back(io::to_json(s(k)));
  return Json{{"start", w.kmin()}, {"samples", samples}};
}

int cmd_simulate(const RunConfig& cfg) {
  const RecursiveFilter filter = load_filter(cfg);
  const Initialization init = load_init(cfg, filter);
  const FiniteSignal x = load_x(cfg);
  const Window window = load_window(cfg, Window(0, 15));
  const FiniteSignal y = simulate(filter, init, x, window);
  emit(cfg, format_or(cfg, "json") == "csv" ? samples_csv(window, y) : dump(window_record(window, y)));
  return 0;
}

int cmd_impulse(const RunConfig& cfg) {
  const RecursiveFilter filter = load_filter(cfg);
  if (cfg.length == 0) throw Error(ErrorCode::InvalidArgument, "length: must be at least 1");
  const FiniteSignal prefix = impulse_response_prefix(filter, cfg.length);
  if (format_or(cfg, "json") == "csv") {
    emit(cfg, samples_csv(Window(0, static_cast<Index>(cfg.length) - 1), prefix));
    return 0;
  }
  Json j{{"filter", io::to_json(filter)}, {"prefix", io::to_json(prefix)}, {"closed", nullptr}, {"error", nullptr}};
  try {
    j["closed"] = io::to_json(impulse_response_closed(filter));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::RepeatedRoots && e.code() != ErrorCode::SingularSystem) throw;
    j["error"] = e.what();
  }
  emit(cfg, dump(j));
  return 0;
}

int cmd_freq(const RunConfig& cfg) {
  const RecursiveFilter filter = load_filter(cfg);
  if (cfg.points == 0) throw Error(ErrorCode::InvalidArgument, "points: grid must have at least one point");
  const auto grid = uniform_grid(cfg.points);
  const auto sweep = freq_sweep(filter, grid);
  if (format_or(cfg, "csv") == "csv") {
    std::ostringstream os;
    write_sweep_csv(os, sweep);
    emit(cfg, os.str());
    return 0;
  }
  Json rows = Json::array();
  for (const auto& p : sweep) {
    rows.push_back(Json{{"f", p.f}, {"H", p.response ? io::to_json(*p.response) : Json(nullptr)}});
  }
  emit(cfg, dump(Json{{"filter", io::to_json(filter)}, {"points", rows}}));
  return 0;
}

int cmd_roc(const RunConfig& cfg) {
  const RecursiveFilter filter = load_filter(cfg);
  emit(cfg, dump(io::to_json(roc_report(filter))));
  return 0;
}

int cmd_settle(const RunConfig& cfg) {
  const RecursiveFilter filter = load_filter(cfg);
  const Index k = settling_time(filter, cfg.f, cfg.settle_tol, cfg.kcap);
  emit(cfg, dump(Json{{"filter", io::to_json(filter)}, {"f", cfg.f}, {"tol", cfg.settle_tol}, {"settling_time", k}}));
  return 0;
}

double magnitude_scale(const SequenceView& s, const Window& w) {
  double m = 1.0;
  for (Index k = w.kmin(); k <= w.kmax(); ++k) m = std::max(m, std::abs(s(k)));
  return m;
}

int cmd_verify(const RunConfig& cfg) {
  const RecursiveFilter filter = load_filter(cfg);
  const auto n = static_cast<Index>(filter.order());
  Rng rng(cfg.seed);
  const bool stable = is_stable(filter);
  const bool backstep = filter.alpha(filter.order()) != Complex{};
  const Window window = load_window(cfg, Window(-10, 20));
  const Window padded = window.padded_below(n);
  const AssociatedLTI sys(filter);

  Json facts = Json::array();
  Json notes = Json::array();
  auto note = [&](int fact, const Error& e) { notes.push_back(Json{{"fact", fact}, {"error", e.what()}}); };
  auto failed = [](int fact) { return io::to_json(FactReport{fact, false, 0.0, std::nullopt, {}}); };

  // Fact 1: (x, h * x) is a solution pair.
  try {
    const FiniteSignal x = random_signal(rng, window.kmin() / 2, window.kmax() / 2);
    FiniteSignal y_tilde = lti_output(sys, x, padded);
    const double tol = cfg.tol * magnitude_scale(view_of(y_tilde), padded);
    if (cfg.corrupt) y_tilde = y_tilde + impulse(3);
    facts.push_back(io::to_json(verify_fact1_against(filter, x, view_of(y_tilde), window, tol)));
  } catch (const Error& e) {
    note(1, e);
    facts.push_back(failed(1));
  }

  // Fact 2: zero-initialised run equals h * x for causal x.
  try {
    const FiniteSignal x = random_signal(rng, 0, std::max<Index>(0, window.kmax() / 2));
    const Index kmax = std::max<Index>(window.kmax(), 0);
    const FiniteSignal y_tilde = lti_output(sys, x, Window(-n, kmax));
    const double tol = cfg.tol * magnitude_scale(view_of(y_tilde), Window(-n, kmax));
    facts.push_back(io::to_json(verify_fact2(filter, x, kmax, tol)));
  } catch (const Error& e) {
    note(2, e);
    facts.push_back(failed(2));
  }

  // Fact 3: h * x plus a random homogeneous solution decomposes back.
  try {
    const FiniteSignal x = random_signal(rng, window.kmin() / 2, window.kmax() / 2);
    ComplexVector init_values;
    for (Index i = 0; i < n; ++i) init_values.push_back(random_complex(rng));
    const Initialization init(std::move(init_values));
    // Without a backstep the homogeneous part is only pinned from k = 0 on.
    const Window w3 = backstep ? window : Window(std::max<Index>(0, window.kmin()), std::max<Index>(0, window.kmax()));
    const Window p3 = w3.padded_below(n);
    SequenceView y0;
    try {
      y0 = view_of(homogeneous_from_init(filter, init));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RepeatedRoots && e.code() != ErrorCode::SingularSystem) throw;
      y0 = view_of(simulate(filter, init, FiniteSignal{}, p3));
    }
    const FiniteSignal y_tilde = lti_output(sys, x, p3);
    const SequenceView y = [&](Index k) { return y_tilde(k) + y0(k); };
    const double tol = cfg.tol * magnitude_scale(y, p3);
    facts.push_back(io::to_json(decompose_fact3(filter, x, y, w3, tol).report));
  } catch (const Error& e) {
    note(3, e);
    facts.push_back(failed(3));
  }

  // Fact 4: H(f) e^{j 2 pi f k} solves the recursion at random frequencies.
  {
    std::uniform_real_distribution<double> fdist(-0.5, 0.5);
    FactReport agg{4, true, 0.0, std::nullopt, {}};
    for (int i = 0; i < 4; ++i) {
      const double f = fdist(rng);
      try {
        const Complex gain = frequency_response(filter, f);
        const double tol = cfg.tol * std::max(1.0, std::abs(gain));
        const FactReport r = verify_fact4(filter, f, window, tol);
        agg.max_residual = std::max(agg.max_residual, r.max_residual);
        if (!r.ok && agg.ok) {
          agg.ok = false;
          agg.counterexample_k = r.counterexample_k;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::PoleOnUnitCircle) throw;
        note(4, e);
      }
    }
    facts.push_back(io::to_json(agg));
  }

  // Fact 5: the outermost-ROC expansion is the simulated impulse response.
  try {
    facts.push_back(io::to_json(verify_fact5(filter)));
  } catch (const Error& e) {
    note(5, e);
    facts.push_back(failed(5));
  }

  const Json bundle{{"filter", io::to_json(filter)},
                    {"seed", cfg.seed},
                    {"stable", stable},
                    {"tol", cfg.tol},
                    {"facts", facts},
                    {"fact4_uniqueness", stable ? "unique" : "not_applicable"},
                    {"notes", notes}};
  emit(cfg, dump(bundle));
  return 0;
}

void add_filter_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--alpha", cfg.alpha, "Filter coefficients alpha_1..alpha_N, e.g. 2.5,-1 or 0.9j");
  app->add_option("--filter-file", cfg.filter_file, "JSON {\"alpha\": [[re, im], ...]}");
  app->add_option("--format", cfg.format, "Output format: json or csv");
  app->add_option("--out", cfg.out, "Write output to PATH instead of standard output");
}

void add_signal_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--init", cfg.init, "y[-N..-1] as a comma list; one value fills all");
  app->add_option("--init-file", cfg.init_file, "JSON {\"init\": [[re, im], ...]}");
  app->add_option("--x", cfg.x, "Input signal as v@k,v@k,...");
  app->add_option("--x-file", cfg.x_file, "JSON {\"start\": k, \"samples\": [[re, im], ...]}");
  app->add_option("--window", cfg.window, "Index window a:b (inclusive)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursive filters as LTI systems: simulation, impulse and frequency responses, ROCs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* simulate_cmd = app.add_subcommand("simulate", "Run the initialised filter over a window");
  add_filter_options(simulate_cmd, cfg);
  add_signal_options(simulate_cmd, cfg);

  auto* impulse_cmd = app.add_subcommand("impulse", "Impulse response prefix and closed form");
  add_filter_options(impulse_cmd, cfg);
  impulse_cmd->add_option("--length", cfg.length, "Prefix length L");

  auto* freq_cmd = app.add_subcommand("freq", "Frequency response on a uniform grid over [-1/2, 1/2)");
  add_filter_options(freq_cmd, cfg);
  freq_cmd->add_option("--points", cfg.points, "Number of grid points M");

  auto* roc_cmd = app.add_subcommand("roc", "Regions of convergence and their impulse responses");
  add_filter_options(roc_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "Check Facts 1-5 on seeded random inputs");
  add_filter_options(verify_cmd, cfg);
  verify_cmd->add_option("--window", cfg.window, "Check window a:b (default -10:20)");
  verify_cmd->add_option("--tol", cfg.tol, "Residual tolerance, scaled by the output magnitude");
  verify_cmd->add_option("--seed", cfg.seed, "Random seed");
  verify_cmd->add_flag("--self-test-corrupt", cfg.corrupt, "Add 1 to h * x at k = 3 before the Fact 1 check");

  auto* settle_cmd = app.add_subcommand("settle", "Settling time for a gated complex exponential");
  add_filter_options(settle_cmd, cfg);
  settle_cmd->add_option("--f", cfg.f, "Frequency in cycles/sample");
  settle_cmd->add_option("--tol", cfg.settle_tol, "Error tolerance (default 1e-3)");
  settle_cmd->add_option("--kcap", cfg.kcap, "Largest index examined");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate_cmd) return cmd_simulate(cfg);
    if (*impulse_cmd) return cmd_impulse(cfg);
    if (*freq_cmd) return cmd_freq(cfg);
    if (*roc_cmd) return cmd_roc(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*settle_cmd) return cmd_settle(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitNumerical;
  }
  return kExitUsage;
}
