#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "subres/grid.hpp"
#include "subres/kernels.hpp"

#if defined(SUBRES_HAVE_OPENMP)
#include <omp.h>
#endif

using namespace subres;

namespace {

template <class T>
bool same_bits(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

std::vector<double> mixed_times() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 5e4);
  std::vector<double> t = make_grid({0.0, 200.0, 513, Spacing::linear});
  for (int i = 0; i < 300; ++i) t.push_back(dist(rng));
  return t;
}

}  // namespace

TEST_CASE("parallel drivers reproduce the serial reference bit for bit") {
#if defined(SUBRES_HAVE_OPENMP)
  // Force several threads even on a single-core host so the schedule actually varies.
  omp_set_num_threads(4);
#endif
  const ModeTable table(ForcingParams(2, 3), Truncation(400));
  const auto t = mixed_times();

  std::vector<double> fs(t.size()), fp(t.size());
  kernels::serial::forcing(table, t, fs);
  kernels::parallel::forcing(table, t, fp);
  CHECK(same_bits(fs, fp));

  std::vector<Sample> us(t.size()), up(t.size());
  kernels::serial::solution(table, t, us);
  kernels::parallel::solution(table, t, up);
  CHECK(same_bits(us, up));

  std::vector<SeriesDecomposition> ds(t.size()), dp(t.size());
  kernels::serial::decomposition(table, t, ds);
  kernels::parallel::decomposition(table, t, dp);
  CHECK(same_bits(ds, dp));

#if defined(SUBRES_HAVE_OPENMP)
  omp_set_num_threads(3);
  std::vector<SeriesDecomposition> dp3(t.size());
  kernels::parallel::decomposition(table, t, dp3);
  CHECK(same_bits(ds, dp3));
#endif
}

TEST_CASE("grid drivers agree with the point kernels") {
  const ModeTable table(ForcingParams(1.7, 2.2), Truncation(50));
  const auto t = make_grid({0.0, 10.0, 11, Spacing::linear});
  std::vector<Sample> out(t.size());
  kernels::solution(table, t, out, Execution::parallel);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Sample s = kernels::solution_point(table, t[i]);
    CHECK(out[i].u == s.u);
    CHECK(out[i].du == s.du);
  }
}

TEST_CASE("size mismatch is rejected") {
  const ModeTable table(ForcingParams(2, 3), Truncation(5));
  std::vector<double> t(4), out(3);
  CHECK_THROWS(kernels::serial::forcing(table, t, out));
  CHECK_THROWS(kernels::parallel::forcing(table, t, out));
}

TEST_CASE("make_grid") {
  const auto lin = make_grid({0.0, 1.0, 5, Spacing::linear});
  CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  const auto lg = make_grid({1.0, 1000.0, 4, Spacing::log});
  CHECK(lg.front() == 1.0);
  CHECK(lg.back() == 1000.0);
  CHECK(lg[1] == doctest::Approx(10.0));
  CHECK_THROWS(make_grid({0.0, 1.0, 1, Spacing::linear}));
  CHECK_THROWS(make_grid({0.0, 1.0, 5, Spacing::log}));
  CHECK_THROWS(make_grid({2.0, 1.0, 5, Spacing::linear}));
}
