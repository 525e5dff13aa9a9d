#pragma once

// Per-mode constants shared by ModeTable and the single-mode functions so both
// paths round identically.

#include <cmath>
#include <cstddef>

namespace subres::detail {

struct ModeTerms {
  double amplitude;  // n^-k
  double gap;        // n^-p
  double weight;     // n^(p-k)
  double response;   // n^2p / D
  double coupling;   // n^p / D
};

inline ModeTerms mode_terms(double k, double p, std::size_t index) {
  const double n = static_cast<double>(index);
  ModeTerms m{};
  m.amplitude = std::pow(n, -k);
  m.gap = std::pow(n, -p);
  m.weight = std::pow(n, p - k);
  // D = 2 n^(p+k) - n^k; dividing through by n^(p+k) keeps large p finite.
  m.response = m.weight / (2.0 - m.gap);
  m.coupling = m.amplitude / (2.0 - m.gap);
  return m;
}

}  // namespace subres::detail
