#include "twomode/analytic.hpp"

#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"

namespace twomode::analytic {

double TaylorSeries::operator()(double x) const {
  double s = 0.0;
  for (int k = order; k >= 0; --k) s = s * x + coeff[k];
  return s;
}

double f_q_oat_exact(int N, double c, double t) {
  if (N < 1) throw ParameterError("f_q_oat_exact: N must be >= 1");
  const double x = c * t;
  // std::pow with an integral exponent keeps the sign of a negative cosine.
  const double p = N - 2.0;
  const double alpha = 1 - std::pow(std::cos(2 * x / N), p);
  const double beta = 4 * std::sin(x / N) * std::pow(std::cos(x / N), p);
  return N * (1 + (N - 1) / 4.0 * (alpha + std::sqrt(alpha * alpha + beta * beta)));
}

bool f_q_oat_in_window(int N, double c, double t) {
  return std::abs(c * t) <= N * std::numbers::pi / 2 - 2 * std::sqrt(static_cast<double>(N));
}

double f_b_oat_exact(int N, double c, double t) {
  const double s = std::sin(c * t / std::sqrt(static_cast<double>(N)));
  const double alpha = 2 * s * s;
  return N * (1 + (N * alpha + std::sqrt(8 * N * alpha + N * N * alpha * alpha)) / 4);
}

TaylorSeries f_q_oat_taylor(int N) { return {{1.0, 1.0, 0.5, 0.125 - 0.75 / N, 0.0}, 3}; }

TaylorSeries f_b_oat_taylor(int N) { return {{1.0, 1.0, 0.5, 0.125 - 1.0 / (6.0 * N), 0.0}, 3}; }

TaylorSeries f_b_tat_taylor(int N, double A, double c) {
  const double r = A * (c - A) / (c * c);
  return {{1.0, 1.0, 0.5, r / 6 + 0.125 - 0.5 / N, r / 6 - 0.5 / N}, 4};
}

TaylorSeries f_hp_oat_taylor() { return {{1.0, 1.0, 0.5, 0.125, 0.0}, 4}; }

TaylorSeries f_hp_tat_taylor(double A, double c) {
  const double r = A * (c - A) / (c * c);
  return {{1.0, 1.0, 0.5, r / 6 + 0.125, r / 6}, 4};
}

double tat_lambda(double A, double c) {
  if (!(c > A && A > 0)) throw DomainError("twist-and-turn is stable unless c > A > 0");
  return std::sqrt(A * (c - A));
}

double t_c(int N, double A, double c) {
  const double lam = tat_lambda(A, c);
  return std::log(N * lam * lam / (c * A)) / lam;
}

double n_exc_oat(double c, double t) { return c * c * t * t / 4; }

double n_exc_tat(double A, double c, double t) {
  const double lam = tat_lambda(A, c);
  const double k = A / lam + lam / A;
  const double s = std::sinh(lam * t);
  return k * k * s * s / 4;
}

}  // namespace twomode::analytic
