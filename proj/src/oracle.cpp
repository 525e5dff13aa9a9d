#include "subres/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "subres/errors.hpp"
#include "subres/kernels.hpp"

namespace subres {

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("integrator tolerances must be > 0");
  if (!(max_step > 0.0)) throw DomainError("integrator max_step must be > 0");
  if (max_steps < 1) throw DomainError("integrator max_steps must be >= 1");
}

namespace {

using State = OscillatorState;

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous extension (Hairer, Norsett & Wanner, DOPRI5 dense output).
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

class DrivenOscillator {
 public:
  explicit DrivenOscillator(const std::function<double(double)>& force) : force_(force) {}

  State operator()(double t, const State& y) {
    ++evaluations;
    return {y[1], force_(t) - y[0]};
  }

  std::size_t evaluations = 0;

 private:
  const std::function<double(double)>& force_;
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (std::size_t i = 0; i < 2; ++i) {
    double acc = 0.0;
    for (const auto& [coef, k] : terms) acc += coef * (*k)[i];
    out[i] += h * acc;
  }
  return out;
}

struct DenseStep {
  std::array<State, 5> r;

  State at(double theta) const {
    const double theta1 = 1.0 - theta;
    State y{};
    for (std::size_t i = 0; i < 2; ++i) {
      y[i] = r[0][i] + theta * (r[1][i] + theta1 * (r[2][i] + theta * (r[3][i] + theta1 * r[4][i])));
    }
    return y;
  }
};

std::string failure_message(const char* what, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "integrator: " << what << " at t = " << t;
  return os.str();
}

}  // namespace

std::vector<Sample> integrate_oscillator(const std::function<double(double)>& force,
                                         OscillatorState initial, std::span<const double> grid,
                                         const IntegratorConfig& config, IntegratorStats* stats) {
  config.validate();
  if (grid.empty()) return {};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("integrator grid must be strictly increasing");
  }

  DrivenOscillator rhs(force);
  std::vector<Sample> out;
  out.reserve(grid.size());
  double t = grid.front();
  State y = initial;
  out.push_back({t, y[0], y[1]});
  const double t_end = grid.back();
  std::size_t next = 1;

  auto error_norm = [&](const State& y0, const State& y1, const State& err) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double scale =
          config.abs_tol + config.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      acc += (err[i] / scale) * (err[i] / scale);
    }
    return std::sqrt(acc / 2.0);
  };

  State k1 = rhs(t, y);
  // Initial step from the scale of y and y' (Hairer's heuristic, first stage only).
  double h;
  {
    double d0 = 0.0, d1n = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      const double sc = config.abs_tol + config.rel_tol * std::abs(y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1n += (k1[i] / sc) * (k1[i] / sc);
    }
    d0 = std::sqrt(d0 / 2.0);
    d1n = std::sqrt(d1n / 2.0);
    h = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * d0 / d1n;
    h = std::min({h, config.max_step, t_end - t});
  }

  constexpr double kSafety = 0.9, kMinFactor = 0.2, kMaxFactor = 10.0;
  bool last_rejected = false;
  std::size_t steps = 0;
  IntegratorStats local;

  while (next < grid.size()) {
    if (++steps > config.max_steps) throw IntegrationError(failure_message("step budget exhausted", t), t);
    // Clip to the next grid time (landing mode) or to the end, and remember the
    // exact target so t does not drift by rounding.
    const double target = config.dense_output ? t_end : grid[next];
    const bool lands = h >= target - t;
    if (lands) h = target - t;
    if (!lands && h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      throw IntegrationError(failure_message("step size underflow", t), t);
    }

    const State k2 = rhs(t + c2 * h, axpy(y, h, {{a21, &k1}}));
    const State k3 = rhs(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        rhs(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y1 =
        axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    const State k7 = rhs(t + h, y1);
    const State err =
        axpy(State{0.0, 0.0}, h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

    const double norm = error_norm(y, y1, err);
    const double factor = std::clamp(kSafety * std::pow(std::max(norm, 1e-300), -0.2), kMinFactor,
                                     kMaxFactor);
    if (!(norm <= 1.0)) {
      if (!std::isfinite(norm)) throw IntegrationError(failure_message("non-finite error estimate", t), t);
      ++local.rejected;
      h *= std::min(factor, 1.0);
      last_rejected = true;
      continue;
    }

    ++local.accepted;
    const double t1 = lands ? target : t + h;
    if (config.dense_output) {
      DenseStep dense;
      for (std::size_t i = 0; i < 2; ++i) {
        const double ydiff = y1[i] - y[i];
        const double bspl = h * k1[i] - ydiff;
        dense.r[0][i] = y[i];
        dense.r[1][i] = ydiff;
        dense.r[2][i] = bspl;
        dense.r[3][i] = ydiff - h * k7[i] - bspl;
        dense.r[4][i] =
            h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      while (next < grid.size() && grid[next] <= t1) {
        const State yi = (grid[next] == t1) ? y1 : dense.at((grid[next] - t) / h);
        out.push_back({grid[next], yi[0], yi[1]});
        ++next;
      }
    } else if (lands) {
      out.push_back({grid[next], y1[0], y1[1]});
      ++next;
    }

    t = t1;
    y = y1;
    k1 = k7;  // first-same-as-last
    h *= last_rejected ? std::min(factor, 1.0) : factor;
    h = std::min(h, config.max_step);
    last_rejected = false;
  }

  local.rhs_evaluations = rhs.evaluations;
  if (stats) *stats = local;
  return out;
}

SolutionSeries integrate_ivp(const ForcingParams& params, const Truncation& trunc,
                             std::span<const double> grid, const IntegratorConfig& config,
                             IntegratorStats* stats) {
  if (grid.empty() || grid.front() != 0.0) throw DomainError("integrate_ivp grid must start at t = 0");
  const ModeTable table(params, trunc);
  const std::function<double(double)> force = [&table](double s) {
    return kernels::forcing_point(table, s);
  };
  return {integrate_oscillator(force, {0.0, 0.0}, grid, config, stats), Method::integrator, params,
          trunc};
}

double residual_check(std::span<const Sample> samples, const std::function<double(double)>& force) {
  if (samples.size() < 5) throw DomainError("residual_check needs at least 5 samples");
  const double h = (samples.back().t - samples.front().t) / static_cast<double>(samples.size() - 1);
  if (!(h > 0.0)) throw DomainError("residual_check needs increasing sample times");
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double dt = samples[i].t - samples[i - 1].t;
    const double slack = 1e-8 * h + 8.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(std::abs(samples[i].t), 1.0);
    if (std::abs(dt - h) > slack) throw DomainError("residual_check needs a uniform grid");
  }
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double second = (samples[i + 1].u - 2.0 * samples[i].u + samples[i - 1].u) / (h * h);
    worst = std::max(worst, std::abs(second + samples[i].u - force(samples[i].t)));
  }
  return worst;
}

double residual_check(const SolutionSeries& series, const ForcingParams& params,
                      const Truncation& trunc) {
  const ModeTable table(params, trunc);
  return residual_check(series.samples,
                        [&table](double s) { return kernels::forcing_point(table, s); });
}

}  // namespace subres
