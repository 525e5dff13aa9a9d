#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace subres {

enum class Spacing { linear, log };

struct GridSpec {
  double t_start = 0.0;
  double t_end = 100.0;
  std::size_t n_points = 1001;
  Spacing spacing = Spacing::linear;
};

/// Strictly increasing sample times with exact endpoints.
/// Throws DomainError for n_points < 2, t_end <= t_start, or a log grid with t_start <= 0.
std::vector<double> make_grid(const GridSpec& spec);

std::string_view to_string(Spacing spacing);

}  // namespace subres
