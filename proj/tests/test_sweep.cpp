#include "doctest.h"

#include "gbs/sweep.hpp"

using namespace gbs;

TEST_CASE("normalized grid") {
  const auto g = normalized_grid(3);
  CHECK(g.size() == 12);
  CHECK(g[0] == BsPair{1, 1, true});
  CHECK(g[1] == BsPair{-1, 1, true});
  CHECK(normalized_grid(20).size() == 420);
  for (const auto& p : g) CHECK(bs_normalize(p.m, p.n) == p);
}

TEST_CASE("parallel verdict matrix matches the serial reference") {
  const auto grid = normalized_grid(8);
  const auto serial = verdict_matrix_serial(grid);
  CHECK(serial.size == grid.size());
  CHECK(verdict_matrix_parallel(grid) == serial);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(serial.positive(i, i));
}

TEST_CASE("deformation trials") {
  const auto trials = make_deformation_trials(12, 15, 99);
  CHECK(trials.size() == 12);
  CHECK(make_deformation_trials(12, 15, 99)[5].seed == trials[5].seed);
  const auto serial = deformation_trials_serial(trials);
  for (const auto& r : serial) CHECK_MESSAGE(r.ok, r.failure);
  CHECK(deformation_trials_parallel(trials) == serial);
}
