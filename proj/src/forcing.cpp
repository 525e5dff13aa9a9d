#include "subres/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "subres/errors.hpp"
#include "subres/kernels.hpp"
#include "mode_terms.hpp"

namespace subres {

namespace {

std::string truncation_message(std::size_t requested, std::size_t required, double bound,
                               double tol) {
  std::ostringstream os;
  os << "insufficient truncation: tail bound " << bound << " with " << requested
     << " terms exceeds tail_tol " << tol << "; need n_terms >= " << required;
  return os.str();
}

}  // namespace

InsufficientTruncation::InsufficientTruncation(std::size_t requested, std::size_t required,
                                               double bound, double tol)
    : NumericalError(truncation_message(requested, required, bound, tol)), required_(required) {}

IntegrationError::IntegrationError(const std::string& what, double t)
    : NumericalError(what), t_(t) {}

ForcingParams::ForcingParams(double k, double p) : k_(k), p_(p) {
  if (!(k > 1.0) || !std::isfinite(k)) throw DomainError("forcing exponent k must be finite and > 1");
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("frequency exponent p must be finite and > 0");
}

Truncation::Truncation(std::size_t n_terms, double tail_tol)
    : n_terms_(n_terms), tail_tol_(tail_tol) {
  if (n_terms < 1) throw DomainError("truncation needs at least one term");
  if (!(tail_tol >= 0.0)) throw DomainError("tail_tol must be nonnegative");
}

double mode_frequency(const ForcingParams& params, std::size_t n) {
  if (n < 1) throw DomainError("mode index starts at 1");
  return 1.0 - std::pow(static_cast<double>(n), -params.p());
}

double forcing_tail_bound(const ForcingParams& params, std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("tail bound needs n_terms >= 1");
  const double k = params.k();
  return std::pow(static_cast<double>(n_terms), 1.0 - k) / (k - 1.0);
}

std::size_t required_terms(const ForcingParams& params, double tail_tol) {
  if (!(tail_tol > 0.0)) throw DomainError("required_terms needs tail_tol > 0");
  const double k = params.k();
  const double estimate = std::ceil(std::pow(tail_tol * (k - 1.0), -1.0 / (k - 1.0)));
  if (!(estimate < 1e18)) return std::numeric_limits<std::size_t>::max();
  auto n = static_cast<std::size_t>(std::max(1.0, estimate));
  while (n > 1 && forcing_tail_bound(params, n - 1) <= tail_tol) --n;
  while (forcing_tail_bound(params, n) > tail_tol) ++n;
  return n;
}

void check_truncation(const ForcingParams& params, const Truncation& trunc) {
  if (trunc.tail_tol() <= 0.0) return;
  const double bound = forcing_tail_bound(params, trunc.n_terms());
  if (bound > trunc.tail_tol()) {
    throw InsufficientTruncation(trunc.n_terms(), required_terms(params, trunc.tail_tol()),
                                 bound, trunc.tail_tol());
  }
}

ModeTable::ModeTable(const ForcingParams& p, const Truncation& trunc) : params(p) {
  check_truncation(params, trunc);
  const std::size_t count = trunc.n_terms();
  amplitude.resize(count);
  gap.resize(count);
  weight.resize(count);
  response.resize(count);
  coupling.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const detail::ModeTerms m = detail::mode_terms(params.k(), params.p(), i + 1);
    amplitude[i] = m.amplitude;
    gap[i] = m.gap;
    weight[i] = m.weight;
    response[i] = m.response;
    coupling[i] = m.coupling;
  }
}

double forcing_value(const ModeTable& table, double t) { return kernels::forcing_point(table, t); }

double forcing_value(const ForcingParams& params, const Truncation& trunc, double t) {
  return forcing_value(ModeTable(params, trunc), t);
}

}  // namespace subres
