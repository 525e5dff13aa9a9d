#pragma once

#include <cstddef>
#include <vector>

namespace subres {

/// Exponents of the almost-periodic forcing f(t) = sum_n n^-k cos((1 - n^-p) t).
/// k controls amplitude decay, p how fast the mode frequencies approach 1.
class ForcingParams {
 public:
  /// Throws DomainError unless k > 1 and p > 0.
  ForcingParams(double k, double p);

  double k() const noexcept { return k_; }
  double p() const noexcept { return p_; }
  /// Envelope decay exponent (k - 1) / p.
  double alpha() const noexcept { return (k_ - 1.0) / p_; }

  friend bool operator==(const ForcingParams&, const ForcingParams&) = default;

 private:
  double k_;
  double p_;
};

inline constexpr std::size_t kDefaultTerms = 200;

/// Number of summed modes plus an optional ceiling on the omitted forcing tail.
/// tail_tol == 0 disables the ceiling.
class Truncation {
 public:
  explicit Truncation(std::size_t n_terms = kDefaultTerms, double tail_tol = 0.0);

  std::size_t n_terms() const noexcept { return n_terms_; }
  double tail_tol() const noexcept { return tail_tol_; }

  friend bool operator==(const Truncation&, const Truncation&) = default;

 private:
  std::size_t n_terms_;
  double tail_tol_;
};

/// omega_n = 1 - n^-p.
double mode_frequency(const ForcingParams& params, std::size_t n);

/// Bound on sum_{n > n_terms} n^-k, hence on the omitted forcing tail for all t.
double forcing_tail_bound(const ForcingParams& params, std::size_t n_terms);

/// Smallest term count whose tail bound does not exceed tail_tol.
std::size_t required_terms(const ForcingParams& params, double tail_tol);

/// Throws InsufficientTruncation when the tail bound exceeds a nonzero tail_tol.
void check_truncation(const ForcingParams& params, const Truncation& trunc);

/// Per-mode constants for n = 1..n_terms. Every series in the library is
/// built from these so that one truncation is shared term by term.
struct ModeTable {
  ModeTable(const ForcingParams& params, const Truncation& trunc);

  std::size_t size() const noexcept { return amplitude.size(); }

  ForcingParams params;
  std::vector<double> amplitude;  // n^-k
  std::vector<double> gap;        // n^-p; omega_n = 1 - gap, theta_n = t * gap
  std::vector<double> weight;     // n^(p-k)
  std::vector<double> response;   // n^(2p-k) / (2 n^p - 1) = n^2p / D
  std::vector<double> coupling;   // n^p / D,  D = 2 n^(p+k) - n^k
};

/// Truncated forcing sum, ascending n, compensated.
double forcing_value(const ModeTable& table, double t);
double forcing_value(const ForcingParams& params, const Truncation& trunc, double t);

}  // namespace subres
