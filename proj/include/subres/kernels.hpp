#pragma once

// Grid kernels. Each quantity has a point kernel and two drivers over a time
// grid: `serial` is the reference loop, `parallel` is the OpenMP loop. Points
// are independent and the per-point summation order is fixed, so the drivers
// agree bit for bit regardless of schedule or thread count.

#include <span>

#include "subres/forcing.hpp"
#include "subres/modal.hpp"

namespace subres::kernels {

double forcing_point(const ModeTable& table, double t);
Sample solution_point(const ModeTable& table, double t);
SeriesDecomposition decomposition_point(const ModeTable& table, double t);

namespace serial {
void forcing(const ModeTable& table, std::span<const double> t, std::span<double> out);
void solution(const ModeTable& table, std::span<const double> t, std::span<Sample> out);
void decomposition(const ModeTable& table, std::span<const double> t,
                   std::span<SeriesDecomposition> out);
}  // namespace serial

namespace parallel {
void forcing(const ModeTable& table, std::span<const double> t, std::span<double> out);
void solution(const ModeTable& table, std::span<const double> t, std::span<Sample> out);
void decomposition(const ModeTable& table, std::span<const double> t,
                   std::span<SeriesDecomposition> out);
}  // namespace parallel

void forcing(const ModeTable& table, std::span<const double> t, std::span<double> out,
             Execution exec);
void solution(const ModeTable& table, std::span<const double> t, std::span<Sample> out,
              Execution exec);
void decomposition(const ModeTable& table, std::span<const double> t,
                   std::span<SeriesDecomposition> out, Execution exec);

/// Number of threads the parallel driver will use (1 without OpenMP).
int max_threads();

}  // namespace subres::kernels
