#include "subres/grid.hpp"

#include <cmath>

#include "subres/errors.hpp"

namespace subres {

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.n_points < 2) throw DomainError("grid needs at least 2 points");
  if (!std::isfinite(spec.t_start) || !std::isfinite(spec.t_end) || !(spec.t_end > spec.t_start)) {
    throw DomainError("grid needs finite t_start < t_end");
  }
  if (spec.spacing == Spacing::log && !(spec.t_start > 0.0)) {
    throw DomainError("log grid needs t_start > 0");
  }
  std::vector<double> grid(spec.n_points);
  const double last = static_cast<double>(spec.n_points - 1);
  if (spec.spacing == Spacing::linear) {
    const double h = (spec.t_end - spec.t_start) / last;
    for (std::size_t i = 0; i < spec.n_points; ++i) {
      grid[i] = spec.t_start + static_cast<double>(i) * h;
    }
  } else {
    const double lo = std::log(spec.t_start);
    const double hi = std::log(spec.t_end);
    for (std::size_t i = 0; i < spec.n_points; ++i) {
      grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / last);
    }
  }
  grid.front() = spec.t_start;
  grid.back() = spec.t_end;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("grid spacing below floating-point resolution");
  }
  return grid;
}

std::string_view to_string(Spacing spacing) {
  return spacing == Spacing::linear ? "linear" : "log";
}

}  // namespace subres
