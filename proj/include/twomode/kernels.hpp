#pragma once

#include <span>

#include <Eigen/Dense>

#include "twomode/parallel.hpp"
#include "twomode/spin.hpp"

namespace twomode::kernels {

// out = V diag(exp(-i lambda t)) V^T in. V is real orthogonal (column-major).
// The serial version is the reference; the OpenMP version splits both
// matrix-vector products by output row and must agree bit for bit.
void spectral_apply_serial(const Eigen::MatrixXd& V, const Eigen::VectorXd& lambda, double t,
                           std::span<const cplx> in, std::span<cplx> out);
void spectral_apply_parallel(const Eigen::MatrixXd& V, const Eigen::VectorXd& lambda, double t,
                             std::span<const cplx> in, std::span<cplx> out);

inline void spectral_apply(Execution exec, const Eigen::MatrixXd& V, const Eigen::VectorXd& lambda, double t,
                           std::span<const cplx> in, std::span<cplx> out) {
  if (exec == Execution::serial)
    spectral_apply_serial(V, lambda, t, in, out);
  else
    spectral_apply_parallel(V, lambda, t, in, out);
}

}  // namespace twomode::kernels
