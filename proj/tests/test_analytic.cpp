#include <doctest.h>

#include <cmath>
#include <numbers>

#include "twomode/analytic.hpp"
#include "twomode/errors.hpp"
#include "twomode/hp.hpp"

using namespace twomode;
namespace an = twomode::analytic;
constexpr double pi = std::numbers::pi;

TEST_CASE("OAT closed form endpoints") {
  CHECK(an::f_q_oat_exact(400, pi, 0.0) == doctest::Approx(400.0));
  CHECK(an::f_b_oat_exact(400, pi, 0.0) == doctest::Approx(400.0));
  CHECK(an::f_b_oat_exact(400, pi, std::sqrt(400.0) / 2) == doctest::Approx(400.0 * 400.0).epsilon(0.01));
  CHECK_THROWS_AS(an::f_q_oat_exact(0, pi, 1.0), ParameterError);
}

TEST_CASE("window predicate") {
  CHECK(an::f_q_oat_in_window(400, pi, 1.0));
  CHECK_FALSE(an::f_q_oat_in_window(400, pi, 200.0));
}

TEST_CASE("Taylor series approximate the closed forms at small x") {
  const int N = 400;
  for (double x : {1e-3, 1e-2, 3e-2}) {
    const double t = x / pi;
    CHECK(std::abs(an::f_b_oat_taylor(N)(x) - an::f_b_oat_exact(N, pi, t) / N) < 1e-7 + 10 * std::pow(x, 4));
    CHECK(std::abs(an::f_q_oat_taylor(N)(x) - an::f_q_oat_exact(N, pi, t) / N) < 1e-7 + 10 * std::pow(x, 4) + 2 * x / N);
  }
}

TEST_CASE("Taylor series share the low orders") {
  for (const an::TaylorSeries& s : {an::f_q_oat_taylor(100), an::f_b_oat_taylor(100), an::f_hp_oat_taylor(),
                                    an::f_b_tat_taylor(100, 1.0, 3.0), an::f_hp_tat_taylor(1.0, 3.0)}) {
    CHECK(s.coeff[0] == 1.0);
    CHECK(s.coeff[1] == 1.0);
    CHECK(s.coeff[2] == 0.5);
    CHECK(s.coeff.size() == 5);
  }
  CHECK(an::f_hp_oat_taylor()(0.2) == doctest::Approx(1 + 0.2 + 0.02 + 0.001));
}

TEST_CASE("instability rate and crossover time") {
  CHECK(an::tat_lambda(pi / 2, pi) == doctest::Approx(pi / 2));
  CHECK_THROWS_AS(an::tat_lambda(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(an::tat_lambda(0.0, 1.0), DomainError);
  const double lam = an::tat_lambda(1.0, 3.0);
  CHECK(an::t_c(100, 1.0, 3.0) == doctest::Approx(std::log(100 * lam * lam / 3.0) / lam));
}

TEST_CASE("excitation numbers agree with integrated HP moments") {
  ModelParams p;
  p.N = 1000;
  p.c = 3.0;
  p.drive = DriveProtocol::constant(1.0);
  const auto traj = integrate_hp(HpMoments{}, p, 2.0, 1e-3);
  CHECK(traj.back().n_exc == doctest::Approx(an::n_exc_tat(1.0, 3.0, 2.0)).epsilon(1e-8));
  p.drive = DriveProtocol::off();
  const auto oat = integrate_hp(HpMoments{}, p, 2.0, 1e-3);
  CHECK(oat.back().n_exc == doctest::Approx(an::n_exc_oat(3.0, 2.0)).epsilon(1e-10));
}
