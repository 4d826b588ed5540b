#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "twomode/breaktime.hpp"
#include "twomode/errors.hpp"

using namespace twomode;
constexpr double pi = std::numbers::pi;

namespace {

std::vector<BreakTimeRecord> synthetic(ScalingModel m, double alpha) {
  std::vector<BreakTimeRecord> out;
  for (int N : {64, 100, 144, 196, 256, 324, 400}) {
    BreakTimeRecord r;
    r.N = N;
    r.has_ib = true;
    r.ib = {alpha * scaling_basis(m, N), true};
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("break time interpolates the first crossing") {
  const std::vector<double> t{0, 1, 2, 3}, ex{1, 1, 1, 1}, ap{1, 1.0, 0.98, 0.9};
  const BreakTime b = t_break(t, ex, ap, 0.04);
  CHECK(b.crossed);
  CHECK(b.t == doctest::Approx(2.25));
  const BreakTime none = t_break(t, ex, ex, 0.04);
  CHECK_FALSE(none.crossed);
  CHECK(none.t == 3.0);
  CHECK_THROWS_AS(t_break(t, ex, std::vector<double>{1.0}, 0.04), DimensionError);
}

TEST_CASE("scaling fits recover synthetic laws") {
  for (ScalingModel m : {ScalingModel::sqrtN, ScalingModel::logN, ScalingModel::log4N}) {
    const auto recs = synthetic(m, 0.3);
    const ScalingFit f = scaling_fit(recs, m, Tier::bmf, 64);
    CHECK(f.alpha == doctest::Approx(0.3));
    CHECK(f.residual < 1e-12);
    CHECK(f.points == 7);
    CHECK(rank_models(recs, Tier::bmf, 64).front().model == m);
  }
}

TEST_CASE("fits ignore record order and low N") {
  auto recs = synthetic(ScalingModel::sqrtN, 0.2);
  recs[0].ib.t *= 5;  // outlier below N_min
  std::mt19937 rng(7);
  std::shuffle(recs.begin(), recs.end(), rng);
  const ScalingFit f = scaling_fit(recs, ScalingModel::sqrtN, Tier::bmf, 100);
  CHECK(f.alpha == doctest::Approx(0.2));
  CHECK(f.N_lo == 100);
  CHECK(f.N_hi == 400);
  CHECK_THROWS_AS(scaling_fit(recs, ScalingModel::sqrtN, Tier::both), ParameterError);
  CHECK_THROWS_AS(scaling_fit(recs, ScalingModel::sqrtN, Tier::hp), ParameterError);
}

TEST_CASE("prefactor law fit") {
  std::vector<std::pair<double, double>> pts;
  for (double lam : {1.0, 1.2, 1.4, 1.6}) pts.emplace_back(lam, 2.83 * std::exp(-1.46 * lam));
  const PrefactorFit f = prefactor_lyapunov_fit(pts);
  CHECK(f.eta == doctest::Approx(2.83));
  CHECK(f.gamma == doctest::Approx(1.46));
  CHECK(f.correlation == doctest::Approx(-1.0));
  pts[0].second = -1.0;
  CHECK_THROWS_AS(prefactor_lyapunov_fit(pts), DomainError);
}

TEST_CASE("break times from lockstep tiers") {
  ModelParams p;
  p.N = 100;
  p.c = pi;
  const BreakTimeRecord r = breaktime_point(p, Regime::stable, 0.01, Tier::both, {0.01, 10.0});
  CHECK(r.has_ib);
  CHECK(r.has_hp);
  CHECK(r.ib.crossed);
  CHECK(r.hp.crossed);
  CHECK(r.hp.t < r.ib.t);
  CHECK(r.ib.t > 0.0);
  CHECK_THROWS_AS(breaktime_point(p, Regime::stable, 1.5, Tier::bmf), ParameterError);
}

TEST_CASE("stable break time grows with N") {
  ModelParams p;
  p.c = 0.2 * pi;
  p.drive = DriveProtocol::kicked(0.4 * pi);
  const std::vector<int> Ns{36, 64, 100};
  const auto recs = breaktime_scan(Ns, p, Regime::stable, 0.01, Tier::bmf, {0.01, 50.0});
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].ib.t < recs[1].ib.t);
  CHECK(recs[1].ib.t < recs[2].ib.t);
  const auto serial = breaktime_scan(Ns, p, Regime::stable, 0.01, Tier::bmf, {0.01, 50.0}, Execution::serial);
  for (std::size_t i = 0; i < 3; ++i) CHECK(serial[i].ib.t == recs[i].ib.t);
}

TEST_CASE("names round trip") {
  for (Regime r : {Regime::stable, Regime::saddle, Regime::chaotic}) CHECK(parse_regime(to_string(r)) == r);
  for (Tier t : {Tier::bmf, Tier::hp, Tier::both}) CHECK(parse_tier(to_string(t)) == t);
  CHECK_THROWS_AS(parse_regime("calm"), ParameterError);
}
