#include <doctest.h>

#include <cmath>
#include <numbers>

#include "twomode/chaos.hpp"
#include "twomode/errors.hpp"

using namespace twomode;
constexpr double pi = std::numbers::pi;

namespace {

ModelParams qkr(double A, double c) {
  ModelParams p;
  p.N = 1;
  p.c = c;
  p.drive = DriveProtocol::kicked(A);
  return p;
}

}  // namespace

TEST_CASE("mean-field flow is tangent to the sphere") {
  const BlochVector s = BlochVector{0.3, -0.5, 0.7}.normalized();
  const BlochVector d = mf_derivative(s, 1.3, 2.2);
  CHECK(s.x * d.x + s.y * d.y + s.z * d.z == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("norm is conserved over 500 periods") {
  for (double c : {0.2, 0.8, 1.4}) {
    const auto orbit = integrate_mf(BlochVector{1, 0, 0}, qkr(0.4 * pi, c * pi), 500);
    REQUIRE(orbit.size() == 501);
    double drift = 0.0;
    for (const BlochVector& s : orbit) drift = std::max(drift, std::abs(s.norm() - 1));
    CHECK(drift < 1e-9);
  }
}

TEST_CASE("pole is a fixed point of the kick-free flow") {
  const BlochVector s = mf_advance(BlochVector{0, 0, 1}, qkr(0.0, 1.0), 0.0, 5.0);
  CHECK(s.z == doctest::Approx(1.0));
}

TEST_CASE("Lyapunov exponents separate regular and chaotic motion") {
  const double regular = lyapunov(qkr(0.4 * pi, 0.2 * pi), BlochVector{1, 0, 0}).lambda_L;
  const double chaotic = lyapunov(qkr(0.4 * pi, 1.4 * pi), BlochVector{1, 0, 0}).lambda_L;
  CHECK(regular < 0.01);
  CHECK(chaotic == doctest::Approx(1.524).epsilon(0.1));
}

TEST_CASE("off-sphere seeds are projected") {
  const LyapunovResult r = lyapunov(qkr(0.4 * pi, 0.8 * pi), BlochVector{2, 0, 0}, 20);
  CHECK(r.projected);
  CHECK(r.m == 20);
  CHECK_FALSE(lyapunov(qkr(0.4 * pi, 0.8 * pi), BlochVector{1, 0, 0}, 20).projected);
}

TEST_CASE("Lyapunov map is independent of the execution mode") {
  const std::vector<double> A{0.2 * pi, 0.4 * pi}, c{0.5 * pi, 1.0 * pi, 1.5 * pi};
  const LyapunovMap s = lyapunov_map(A, c, BlochVector{1, 0, 0}, 30, 1e-5, 1.0, 0.01, Execution::serial);
  const LyapunovMap p = lyapunov_map(A, c, BlochVector{1, 0, 0}, 30, 1e-5, 1.0, 0.01, Execution::parallel);
  REQUIRE(s.lambda.size() == 6);
  CHECK(s.lambda == p.lambda);
  CHECK(s.at(1, 2) == lyapunov(qkr(0.4 * pi, 1.5 * pi), BlochVector{1, 0, 0}, 30).lambda_L);
}

TEST_CASE("seed grid covers the sphere") {
  const auto seeds = default_seed_grid(20);
  REQUIRE(seeds.size() == 400);
  for (const BlochVector& s : seeds) CHECK(s.norm() == doctest::Approx(1.0));
}

TEST_CASE("Poincare section layout") {
  const auto seeds = default_seed_grid(3);
  const auto pts = poincare_section(qkr(0.4 * pi, 0.8 * pi), seeds, 5);
  REQUIRE(pts.size() == 9 * 6);
  CHECK(pts[6].seed_id == 1);
  CHECK(pts[6].period_index == 0);
  for (const PoincarePoint& q : pts) {
    CHECK(q.phi > -pi - 1e-12);
    CHECK(q.phi <= pi + 1e-12);
    CHECK(std::abs(q.s_z) <= 1.0 + 1e-12);
  }
}

TEST_CASE("regular fraction ordering") {
  const auto seeds = default_seed_grid(6);
  const double f_reg = regular_fraction(qkr(0.4 * pi, 0.2 * pi), seeds, 100);
  const double f_chaos = regular_fraction(qkr(0.4 * pi, 1.4 * pi), seeds, 100);
  CHECK(f_reg > f_chaos);
  CHECK(regular_fraction(qkr(0.4 * pi, 0.8 * pi), seeds, 50, 1e-8, 1e-3, Execution::serial) ==
        regular_fraction(qkr(0.4 * pi, 0.8 * pi), seeds, 50, 1e-8, 1e-3, Execution::parallel));
}

TEST_CASE("errors") {
  ModelParams p = qkr(1.0, 1.0);
  p.drive = DriveProtocol::constant(1.0);
  CHECK_THROWS_AS(integrate_mf(BlochVector{}, p, 3), ParameterError);
  CHECK_THROWS_AS(lyapunov(qkr(1, 1), BlochVector{}, 0), ParameterError);
  CHECK_THROWS_AS(lyapunov(qkr(1, 1), BlochVector{}, 10, 0.0), ParameterError);
  CHECK_THROWS_AS(default_seed_grid(0), ParameterError);
}
