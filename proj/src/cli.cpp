#include "subres/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>

#include "subres/asymptotics.hpp"
#include "subres/csv.hpp"
#include "subres/errors.hpp"
#include "subres/kernels.hpp"
#include "subres/modal.hpp"
#include "subres/verify.hpp"

#ifndef SUBRES_VERSION
#define SUBRES_VERSION "dev"
#endif

namespace subres::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"forcing", Command::forcing}, {"solve", Command::solve},   {"decompose", Command::decompose},
    {"envelope", Command::envelope}, {"sweep", Command::sweep}, {"verify", Command::verify},
    {"profile", Command::profile},
};

std::string command_name(Command c) {
  for (const auto& [name, value] : kCommands) {
    if (value == c) return name;
  }
  return "?";
}

struct Parsed {
  RunConfig config;
  std::string command;
  bool log_grid = false;
};

std::unique_ptr<CLI::App> build_app(Parsed& p) {
  auto app = std::make_unique<CLI::App>(
      "Linear oscillator under the almost-periodic forcing sum n^-k cos((1 - n^-p) t)", "subres");
  RunConfig& c = p.config;
  std::vector<std::string> names;
  for (const auto& entry : kCommands) names.push_back(entry.first);
  app->add_option("command,--command", p.command, "forcing | solve | decompose | envelope | sweep | verify | profile")
      ->check(CLI::IsMember(names));
  app->set_config("--config", "", "Flat key = value configuration file (flags override it)");
  app->add_option("--k", c.k, "Amplitude decay exponent, k > 1");
  app->add_option("--p", c.p, "Frequency-gap exponent, p > 0");
  app->add_option("--terms", c.n_terms, "Number of forcing modes summed");
  app->add_option("--tail-tol", c.tail_tol, "Reject truncations whose forcing tail bound exceeds this (0: off)");
  app->add_option("--t-start", c.grid.t_start, "First grid time");
  app->add_option("--t-end", c.grid.t_end, "Last grid time (profile: the evaluation time)");
  app->add_option("--points", c.grid.n_points, "Number of grid points");
  app->add_flag("--log-grid", p.log_grid, "Logarithmic grid spacing");
  app->add_option("--out", c.output_path, "Output CSV path (default: stdout)");
  app->add_flag("--plot", c.emit_plot, "Also write a gnuplot script next to the CSV");
  app->add_option("--rel-tol", c.integrator.rel_tol, "Integrator relative tolerance");
  app->add_option("--abs-tol", c.integrator.abs_tol, "Integrator absolute tolerance");
  app->add_option("--max-step", c.integrator.max_step, "Integrator maximum step");
  app->add_option("--dense-output", c.integrator.dense_output, "Integrator dense output (true/false)");
  app->add_option("--quad-rel-tol", c.tolerances.rel_tol, "Quadrature relative tolerance");
  app->add_option("--quad-abs-tol", c.tolerances.abs_tol, "Quadrature/series absolute tolerance");
  app->add_option("--split-point", c.tolerances.split_point, "Series/quadrature split for singular integrals");
  app->add_option("--fit-samples", c.fit_samples, "Envelope fit window count");
  app->add_option("--sweep-k", c.sweep_k, "k values for sweep");
  app->add_option("--sweep-p", c.sweep_p, "p values for sweep");
  return app;
}

RunConfig finish(Parsed& p) {
  if (p.command.empty()) throw UsageError("missing command");
  RunConfig c = p.config;
  c.command = kCommands.at(p.command);
  c.grid.spacing = p.log_grid ? Spacing::log : Spacing::linear;
  try {
    ForcingParams(c.k, c.p);
    Truncation(c.n_terms, c.tail_tol);
    make_grid(c.grid);
    c.tolerances.validate();
    c.integrator.validate();
    for (double k : c.sweep_k) ForcingParams(k, 1.0);
    for (double q : c.sweep_p) ForcingParams(2.0, q);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (c.emit_plot && c.output_path.empty()) throw UsageError("--plot needs --out");
  if (c.fit_samples < 8) throw UsageError("--fit-samples must be >= 8");
  return c;
}

std::string value_list(const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += csv::format(values[i]);
  }
  return s + "]";
}

// Writes to `path.partial` and renames on commit; the partial file is removed
// if the sink is destroyed uncommitted.
class OutputSink {
 public:
  explicit OutputSink(std::string path) : path_(std::move(path)) {
    if (!path_.empty()) {
      file_.open(partial(), std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open " + partial());
    }
  }
  OutputSink(const OutputSink&) = delete;
  OutputSink& operator=(const OutputSink&) = delete;
  ~OutputSink() {
    if (!path_.empty() && !committed_) {
      file_.close();
      std::error_code ec;
      std::filesystem::remove(partial(), ec);
    }
  }

  std::ostream& stream() { return path_.empty() ? std::cout : static_cast<std::ostream&>(file_); }

  void commit() {
    if (path_.empty()) {
      std::cout.flush();
      return;
    }
    file_.close();
    if (!file_) throw std::runtime_error("write failed: " + path_);
    std::filesystem::rename(partial(), path_);
    committed_ = true;
  }

 private:
  std::string partial() const { return path_ + ".partial"; }
  std::string path_;
  std::ofstream file_;
  bool committed_ = false;
};

void write_preamble(csv::Writer& w, const RunConfig& c) {
  w.comment(std::string("subres ") + SUBRES_VERSION);
  w.comment(serialize(c));
}

std::string plot_path(const std::string& csv_path) {
  return std::filesystem::path(csv_path).replace_extension(".gp").string();
}

void write_plot(const RunConfig& c, const std::string& body) {
  OutputSink sink(plot_path(c.output_path));
  auto& os = sink.stream();
  os << "# gnuplot script generated by subres " << SUBRES_VERSION << '\n'
     << "set datafile separator ','\n"
     << "set datafile commentschars '#'\n"
     << "set key autotitle columnhead\n"
     << "data = '" << std::filesystem::path(c.output_path).filename().string() << "'\n"
     << body;
  sink.commit();
}

std::vector<double> grid_of(const RunConfig& c) { return make_grid(c.grid); }

void run_forcing(const RunConfig& c, std::ostream& out) {
  const ModeTable table(ForcingParams(c.k, c.p), Truncation(c.n_terms, c.tail_tol));
  const auto grid = grid_of(c);
  std::vector<double> f(grid.size());
  kernels::forcing(table, grid, f, Execution::parallel);
  csv::Writer w(out);
  write_preamble(w, c);
  w.comment("forcing tail bound = " + csv::format(forcing_tail_bound(table.params, c.n_terms)));
  w.header({"t", "f"});
  for (std::size_t i = 0; i < grid.size(); ++i) w.row({grid[i], f[i]});
}

void run_solve(const RunConfig& c, std::ostream& out) {
  const ForcingParams params(c.k, c.p);
  const Truncation trunc(c.n_terms, c.tail_tol);
  const auto grid = grid_of(c);
  if (grid.front() < 0.0) throw UsageError("solve needs t_start >= 0");
  const auto exact = superposed_solution(params, trunc, grid);
  // The integrator always starts from the zero data at t = 0.
  std::vector<double> ivp_grid;
  const bool prepend = grid.front() > 0.0;
  if (prepend) ivp_grid.push_back(0.0);
  ivp_grid.insert(ivp_grid.end(), grid.begin(), grid.end());
  const auto numeric = integrate_ivp(params, trunc, ivp_grid, c.integrator);
  csv::Writer w(out);
  write_preamble(w, c);
  w.header({"t", "u_closed_form", "u_integrator", "abs_diff"});
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = exact.samples[i].u;
    const double b = numeric.samples[i + (prepend ? 1 : 0)].u;
    worst = std::max(worst, std::abs(a - b));
    w.row({grid[i], a, b, std::abs(a - b)});
  }
  w.comment("max abs_diff = " + csv::format(worst));
}

void run_decompose(const RunConfig& c, std::ostream& out) {
  const auto grid = grid_of(c);
  const auto parts = decompose_grid(ForcingParams(c.k, c.p), Truncation(c.n_terms, c.tail_tol), grid);
  csv::Writer w(out);
  write_preamble(w, c);
  w.header({"t", "S", "C", "S_rem", "C_rem", "R3", "R4", "sigma_s", "sigma_c"});
  for (const auto& d : parts) {
    w.row({d.t, d.S, d.C, d.S_rem, d.C_rem, d.R3, d.R4, d.sigma_s, d.sigma_c});
  }
}

void run_envelope(const RunConfig& c, std::ostream& out) {
  const ForcingParams params(c.k, c.p);
  const Truncation trunc(c.n_terms, c.tail_tol);
  const auto grid = grid_of(c);
  if (!(grid.front() > 0.0)) throw UsageError("envelope needs t_start > 0");
  const auto coeffs = envelope_coefficients(params, c.tolerances);
  const auto parts = decompose_grid(params, trunc, grid);
  const auto fit = empirical_envelope_fit(params, trunc, c.grid.t_start, c.grid.t_end,
                                          c.fit_samples, c.tolerances);
  csv::Writer w(out);
  write_preamble(w, c);
  w.header({"t", "S", "C", "S_pred", "C_pred"});
  for (const auto& d : parts) {
    const auto pred = envelope_prediction(coeffs, d.t);
    w.row({d.t, d.S, d.C, pred.S_pred, pred.C_pred});
  }
  std::ostringstream summary;
  summary << "alpha = " << csv::format(coeffs.alpha) << "\n"
          << "C_s = " << csv::format(coeffs.C_s) << "\n"
          << "C_c = " << csv::format(coeffs.C_c) << "\n"
          << "A_alpha = " << csv::format(coeffs.A_alpha) << "\n"
          << "phi_alpha = " << csv::format(coeffs.phi_alpha) << "\n"
          << "exponent = " << csv::format(fit.exponent_s) << "\n"
          << "exponent_c = " << csv::format(fit.exponent_c) << "\n"
          << "kappa_s = " << csv::format(fit.kappa_s) << "\n"
          << "kappa_c = " << csv::format(fit.kappa_c) << "\n"
          << "kappa_s_drift = " << csv::format(fit.kappa_s_drift) << "\n"
          << "kappa_c_drift = " << csv::format(fit.kappa_c_drift) << "\n"
          << "fit_windows = " << fit.windows;
  w.comment(summary.str());
  if (c.emit_plot) {
    write_plot(c, std::string(c.grid.spacing == Spacing::log ? "set logscale x\n" : "") +
                      "set xlabel 't'\n"
                      "set multiplot layout 2,1\n"
                      "set ylabel 'sin t coefficient'\n"
                      "plot data using 1:2 with lines title 'series (curve 1)', "
                      "data using 1:4 with lines title 'asymptotics (curve 2)'\n"
                      "set ylabel 'cos t coefficient'\n"
                      "plot data using 1:3 with lines title 'series (curve 1)', "
                      "data using 1:5 with lines title 'asymptotics (curve 2)'\n"
                      "unset multiplot\n");
  }
}

void run_sweep(const RunConfig& c, std::ostream& out) {
  const std::vector<double> ks = c.sweep_k.empty() ? std::vector<double>{c.k} : c.sweep_k;
  const std::vector<double> ps = c.sweep_p.empty() ? std::vector<double>{c.p} : c.sweep_p;
  struct Point {
    double k, p;
    EnvelopeCoefficients coeffs;
    std::string skipped;
  };
  std::vector<Point> points;
  for (double k : ks) {
    for (double p : ps) points.push_back({k, p, {}, {}});
  }
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      points[i].coeffs = envelope_coefficients(ForcingParams(points[i].k, points[i].p), c.tolerances);
    } catch (const std::exception& e) {
      points[i].skipped = e.what();
    }
  }
  csv::Writer w(out);
  write_preamble(w, c);
  w.header({"k", "p", "alpha", "C_s", "C_c", "A_alpha", "phi_alpha"});
  for (const auto& pt : points) {
    if (!pt.skipped.empty()) {
      w.comment("skipped k = " + csv::format(pt.k) + ", p = " + csv::format(pt.p) + ": " + pt.skipped);
      continue;
    }
    const auto& e = pt.coeffs;
    w.row({pt.k, pt.p, e.alpha, e.C_s, e.C_c, e.A_alpha, e.phi_alpha});
  }
}

void run_profile(const RunConfig& c, std::ostream& out) {
  const ForcingParams params(c.k, c.p);
  const double t = c.grid.t_end;
  const auto cut = oscillation_cutoffs(params, t);
  csv::Writer w(out);
  write_preamble(w, c);
  w.comment("t = " + csv::format(t) + ", N = " + std::to_string(cut.N) + ", M = " + std::to_string(cut.M));
  w.header({"n", "term", "phase", "phase_at_least_half_pi"});
  for (std::size_t i = 1; i <= c.n_terms; ++i) {
    const double n = static_cast<double>(i);
    const double phase = t * std::pow(n, -c.p);
    w.row({n, std::pow(n, c.p - c.k) * std::sin(phase), phase,
           phase >= std::numbers::pi / 2 ? 1.0 : 0.0});
  }
  if (c.emit_plot) {
    write_plot(c, "set xlabel 'n'\nset ylabel 'n^(p-k) sin(t/n^p)'\nset arrow from " +
                      std::to_string(cut.N) + ", graph 0 to " + std::to_string(cut.N) +
                      ", graph 1 nohead dashtype 2\n"
                      "plot data using 1:2 with linespoints title 'summand'\n");
  }
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  Parsed p;
  auto app = build_app(p);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return finish(p);
}

std::string serialize(const RunConfig& c) {
  std::ostringstream os;
  os << "command = " << command_name(c.command) << '\n'
     << "k = " << csv::format(c.k) << '\n'
     << "p = " << csv::format(c.p) << '\n'
     << "terms = " << c.n_terms << '\n'
     << "tail-tol = " << csv::format(c.tail_tol) << '\n'
     << "t-start = " << csv::format(c.grid.t_start) << '\n'
     << "t-end = " << csv::format(c.grid.t_end) << '\n'
     << "points = " << c.grid.n_points << '\n'
     << "log-grid = " << (c.grid.spacing == Spacing::log ? "true" : "false") << '\n'
     << "plot = " << (c.emit_plot ? "true" : "false") << '\n'
     << "rel-tol = " << csv::format(c.integrator.rel_tol) << '\n'
     << "abs-tol = " << csv::format(c.integrator.abs_tol) << '\n'
     << "max-step = " << csv::format(c.integrator.max_step) << '\n'
     << "dense-output = " << (c.integrator.dense_output ? "true" : "false") << '\n'
     << "quad-rel-tol = " << csv::format(c.tolerances.rel_tol) << '\n'
     << "quad-abs-tol = " << csv::format(c.tolerances.abs_tol) << '\n'
     << "split-point = " << csv::format(c.tolerances.split_point) << '\n'
     << "fit-samples = " << c.fit_samples << '\n';
  if (!c.sweep_k.empty()) os << "sweep-k = " << value_list(c.sweep_k) << '\n';
  if (!c.sweep_p.empty()) os << "sweep-p = " << value_list(c.sweep_p) << '\n';
  return os.str();
}

int execute(const RunConfig& c, std::ostream& log) {
  if (c.command == Command::verify) {
    OutputSink sink(c.output_path);
    const bool ok = verify::report(verify::run_suite(), sink.stream());
    sink.commit();
    if (!c.output_path.empty()) log << "verification " << (ok ? "passed" : "FAILED") << '\n';
    return ok ? kSuccess : kVerificationFailure;
  }
  OutputSink sink(c.output_path);
  switch (c.command) {
    case Command::forcing:
      run_forcing(c, sink.stream());
      break;
    case Command::solve:
      run_solve(c, sink.stream());
      break;
    case Command::decompose:
      run_decompose(c, sink.stream());
      break;
    case Command::envelope:
      run_envelope(c, sink.stream());
      break;
    case Command::sweep:
      run_sweep(c, sink.stream());
      break;
    case Command::profile:
      run_profile(c, sink.stream());
      break;
    case Command::verify:
      break;
  }
  sink.commit();
  return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& log) {
  Parsed p;
  auto app = build_app(p);
  try {
    app->parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    log << app->help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    log << "usage error: " << e.what() << '\n' << "run with --help for options\n";
    return kUsageError;
  }
  try {
    return execute(finish(p), log);
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    log << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace subres::cli
