#pragma once

#include <array>

namespace twomode::analytic {

// Coefficients of F/N in powers of x = ct. Terms above `order` are unknown
// and stored as zero.
struct TaylorSeries {
  std::array<double, 5> coeff{};
  int order = 4;

  double operator()(double x) const;
};

// Exact one-axis-twisting QFI (largest eigenvalue of the y-z block).
double f_q_oat_exact(int N, double c, double t);
// True inside ct <= N pi/2 - 2 sqrt(N), where the y-z block dominates.
bool f_q_oat_in_window(int N, double c, double t);
double f_b_oat_exact(int N, double c, double t);

TaylorSeries f_q_oat_taylor(int N);
TaylorSeries f_b_oat_taylor(int N);
TaylorSeries f_b_tat_taylor(int N, double A, double c);
TaylorSeries f_hp_oat_taylor();
TaylorSeries f_hp_tat_taylor(double A, double c);

// Instability rate sqrt(A(c - A)) of twist-and-turn; requires c > A > 0.
double tat_lambda(double A, double c);
double t_c(int N, double A, double c);

double n_exc_oat(double c, double t);
double n_exc_tat(double A, double c, double t);

}  // namespace twomode::analytic
