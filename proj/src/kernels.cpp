#include "twomode/kernels.hpp"

#include <cmath>
#include <vector>

#include <omp.h>

#include "twomode/errors.hpp"

namespace twomode {

int max_threads() { return omp_get_max_threads(); }
void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

namespace kernels {

namespace {

void check_dims(const Eigen::MatrixXd& V, const Eigen::VectorXd& lambda, std::span<const cplx> in,
                std::span<cplx> out) {
  const auto n = static_cast<std::size_t>(V.rows());
  if (static_cast<std::size_t>(V.cols()) != n || static_cast<std::size_t>(lambda.size()) != n || in.size() != n ||
      out.size() != n)
    throw DimensionError("spectral_apply: dimension mismatch");
}

// Row i of V^T x is column i of V dotted with x.
cplx project_row(const Eigen::MatrixXd& V, std::size_t i, std::span<const cplx> x) {
  const double* col = V.data() + i * V.rows();
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    re += col[k] * x[k].real();
    im += col[k] * x[k].imag();
  }
  return {re, im};
}

cplx expand_row(const Eigen::MatrixXd& V, std::size_t i, std::span<const cplx> y) {
  const auto n = static_cast<std::size_t>(V.rows());
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double v = V.data()[k * n + i];
    re += v * y[k].real();
    im += v * y[k].imag();
  }
  return {re, im};
}

}  // namespace

void spectral_apply_serial(const Eigen::MatrixXd& V, const Eigen::VectorXd& lambda, double t,
                           std::span<const cplx> in, std::span<cplx> out) {
  check_dims(V, lambda, in, out);
  const std::size_t n = in.size();
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::polar(1.0, -lambda[i] * t) * project_row(V, i, in);
  for (std::size_t i = 0; i < n; ++i) out[i] = expand_row(V, i, y);
}

void spectral_apply_parallel(const Eigen::MatrixXd& V, const Eigen::VectorXd& lambda, double t,
                             std::span<const cplx> in, std::span<cplx> out) {
  check_dims(V, lambda, in, out);
  const auto n = static_cast<long long>(in.size());
  std::vector<cplx> y(in.size());
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) y[i] = std::polar(1.0, -lambda[i] * t) * project_row(V, i, in);
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) out[i] = expand_row(V, i, y);
  }
}

}  // namespace kernels
}  // namespace twomode
