#include <doctest.h>

#include <cmath>

#include "twomode/qpt.hpp"

using namespace twomode;

TEST_CASE("parabolic peak finds an interior maximum") {
  std::vector<double> x, y;
  for (int i = 0; i <= 20; ++i) {
    x.push_back(0.1 * i);
    y.push_back(-(x.back() - 1.03) * (x.back() - 1.03));
  }
  const CriticalPoint p = parabolic_peak(x, y);
  CHECK(p.A == doctest::Approx(1.03));
  CHECK_FALSE(p.at_edge);
  y.back() = 10.0;
  CHECK(parabolic_peak(x, y).at_edge);
}

TEST_CASE("small sweep") {
  SweepOptions o;
  o.N = 20;
  o.v = 1e-2;
  o.A_max = 2.0;
  o.dt = 5e-3;
  o.sample_every = 10;
  const SweepResult r = adiabatic_sweep(o);
  REQUIRE(r.samples.size() > 10);
  const SweepSample& first = r.samples.front();
  CHECK(first.A == 0.0);
  CHECK(first.sz_exact == doctest::Approx(1.0));
  CHECK(first.sz_bmf == doctest::Approx(1.0));
  CHECK(first.F_Q >= o.N * (1 - 1e-9));
  for (std::size_t i = 1; i < r.samples.size(); ++i) CHECK(r.samples[i].A > r.samples[i - 1].A);
  CHECK(r.samples.back().A == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(r.star_Q.A > 0.5);
  CHECK(r.star_Q.A < 1.5);
}

TEST_CASE("single-tier sweeps leave the other tier empty") {
  SweepOptions o;
  o.N = 10;
  o.v = 5e-2;
  o.A_max = 1.0;
  o.tier = SweepTier::bmf;
  const SweepResult r = adiabatic_sweep(o);
  CHECK(std::isnan(r.samples.back().F_Q));
  CHECK(std::isfinite(r.samples.back().F_B));
}
