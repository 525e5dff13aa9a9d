#include "subres/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "subres/summation.hpp"

#if defined(SUBRES_HAVE_OPENMP)
#include <omp.h>
#endif

namespace subres::kernels {

double forcing_point(const ModeTable& table, double t) {
  CompensatedSum f;
  for (std::size_t i = 0; i < table.size(); ++i) {
    f += table.amplitude[i] * std::cos(t - t * table.gap[i]);
  }
  return f.value();
}

// cos(omega t) - cos t = sin t sin(th) - 2 cos t sin^2(th/2) and the matching
// derivative, so t enters only through sin t and cos t.
Sample solution_point(const ModeTable& table, double t) {
  const double st = std::sin(t);
  const double ct = std::cos(t);
  CompensatedSum u_sin, u_cos, v_sin, v_cos;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double a = table.response[i];
    const double g = table.gap[i];
    const double theta = t * g;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double h = std::sin(0.5 * theta);
    const double versine = 2.0 * h * h;  // 1 - cos(theta)
    u_sin += a * s;
    u_cos += a * -versine;
    v_sin += a * (versine + g * c);
    v_cos += a * ((1.0 - g) * s);
  }
  return {t, st * u_sin.value() + ct * u_cos.value(), st * v_sin.value() + ct * v_cos.value()};
}

SeriesDecomposition decomposition_point(const ModeTable& table, double t) {
  CompensatedSum S, C, S_rem, C_rem, R3, R4, sig_s, sig_c;
  const double two_t = 2.0 * t;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double theta = t * table.gap[i];
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double h = std::sin(0.5 * theta);
    const double cos_minus_one = -2.0 * h * h;
    const double s2 = std::sin(theta - two_t);
    const double c2 = std::cos(theta - two_t);
    const double small = table.coupling[i];   // n^p / D
    const double large = table.response[i];   // n^2p / D
    S += 0.5 * (-small * s2 + 2.0 * large * s - small * s);
    C += 0.5 * (small * c2 + 2.0 * large * cos_minus_one - small * c);
    S_rem += 0.5 * (-small * (s2 + s));
    C_rem += 0.5 * (small * (c2 - c));
    R3 += 2.0 * large * s;
    R4 += 2.0 * large * cos_minus_one;
    sig_s += table.weight[i] * s;
    sig_c += table.weight[i] * (h * h);
  }
  return {t,          S.value(),  C.value(),     S_rem.value(), C_rem.value(),
          R3.value(), R4.value(), sig_s.value(), sig_c.value(), table.size()};
}

namespace {

template <class Out>
void check_sizes(std::span<const double> t, std::span<Out> out) {
  if (t.size() != out.size()) throw std::invalid_argument("kernel output size mismatch");
}

}  // namespace

namespace serial {

void forcing(const ModeTable& table, std::span<const double> t, std::span<double> out) {
  check_sizes(t, out);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = forcing_point(table, t[i]);
}

void solution(const ModeTable& table, std::span<const double> t, std::span<Sample> out) {
  check_sizes(t, out);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = solution_point(table, t[i]);
}

void decomposition(const ModeTable& table, std::span<const double> t,
                   std::span<SeriesDecomposition> out) {
  check_sizes(t, out);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = decomposition_point(table, t[i]);
}

}  // namespace serial

namespace parallel {

void forcing(const ModeTable& table, std::span<const double> t, std::span<double> out) {
  check_sizes(t, out);
  const auto n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = forcing_point(table, t[i]);
}

void solution(const ModeTable& table, std::span<const double> t, std::span<Sample> out) {
  check_sizes(t, out);
  const auto n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = solution_point(table, t[i]);
}

void decomposition(const ModeTable& table, std::span<const double> t,
                   std::span<SeriesDecomposition> out) {
  check_sizes(t, out);
  const auto n = static_cast<std::ptrdiff_t>(t.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = decomposition_point(table, t[i]);
}

}  // namespace parallel

void forcing(const ModeTable& table, std::span<const double> t, std::span<double> out,
             Execution exec) {
  exec == Execution::serial ? serial::forcing(table, t, out) : parallel::forcing(table, t, out);
}

void solution(const ModeTable& table, std::span<const double> t, std::span<Sample> out,
              Execution exec) {
  exec == Execution::serial ? serial::solution(table, t, out) : parallel::solution(table, t, out);
}

void decomposition(const ModeTable& table, std::span<const double> t,
                   std::span<SeriesDecomposition> out, Execution exec) {
  exec == Execution::serial ? serial::decomposition(table, t, out)
                            : parallel::decomposition(table, t, out);
}

int max_threads() {
#if defined(SUBRES_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace subres::kernels
