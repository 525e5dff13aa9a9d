#pragma once

#include <cmath>

namespace subres {

/// Neumaier's variant of Kahan summation: the compensation term also
/// captures the low-order bits when an addend exceeds the running sum.
struct CompensatedSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) noexcept {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  double value() const noexcept { return sum + compensation; }
};

}  // namespace subres
