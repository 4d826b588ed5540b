#include <doctest.h>

#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"
#include "twomode/hp.hpp"

using namespace twomode;
constexpr double pi = std::numbers::pi;

namespace {

ModelParams tat(int N, double A, double c) {
  ModelParams p;
  p.N = N;
  p.c = c;
  p.drive = A == 0.0 ? DriveProtocol::off() : DriveProtocol::constant(A);
  return p;
}

}  // namespace

TEST_CASE("vacuum has no excitations") {
  CHECK(n_exc(HpMoments{}) == 0.0);
  CHECK(f_hp(0.0, 100) == 100.0);
  CHECK(f_hp(-1e-14, 100) == 100.0);
  CHECK_THROWS_AS(f_hp(-0.1, 100), DomainError);
}

TEST_CASE("F_HP formula") {
  const double n = 2.0;
  CHECK(f_hp(n, 10) == doctest::Approx(10 * (1 + 2 * n + 2 * std::sqrt(n * (n + 1)))));
}

TEST_CASE("OAT excitations grow quadratically") {
  const double c = pi;
  const auto traj = integrate_hp(HpMoments{}, tat(10000, 0.0, c), 2.0, 1e-3);
  // Exact solution: qq = 1/2, qp = -c t / 2, pp = 1/2 + c^2 t^2 / 2.
  const HpSample& s = traj.back();
  CHECK(s.m.qp == doctest::Approx(-c * 2.0 / 2).epsilon(1e-10));
  CHECK(s.m.pp == doctest::Approx(0.5 + c * c * 4.0 / 2).epsilon(1e-10));
  CHECK(s.n_exc == doctest::Approx(c * c * 4.0 / 4).epsilon(1e-10));
}

TEST_CASE("symplectic invariant is conserved") {
  for (auto [A, c] : {std::pair{0.0, pi}, {2.0, 1.0}, {1.0, 3.0}}) {
    const double t_end = 3.0;
    const auto traj = integrate_hp(HpMoments{}, tat(400, A, c), t_end, 1e-3);
    double drift = 0.0;
    for (const HpSample& s : traj) drift = std::max(drift, std::abs(s.m.uncertainty() - 0.25) / (s.m.qq * s.m.pp));
    CHECK(drift / t_end < 1e-9);
    for (const HpSample& s : traj) CHECK(s.F_HP >= 400.0 * (1 - 1e-12));
  }
}

TEST_CASE("validity flag trips once excitations exceed N/10") {
  const auto traj = integrate_hp(HpMoments{}, tat(40, 1.0, 3.0), 5.0, 1e-3);
  CHECK(traj.front().valid);
  CHECK_FALSE(traj.back().valid);
  for (const HpSample& s : traj) CHECK(s.valid == (s.n_exc <= 4.0));
}

TEST_CASE("stable twist-and-turn stays bounded") {
  const auto traj = integrate_hp(HpMoments{}, tat(400, 2.0, 1.0), 30.0, 1e-3);
  for (const HpSample& s : traj) CHECK(s.n_exc < 1.0);
}
