#pragma once
// Independent dense-matrix references for small N. Nothing here touches the
// tridiagonal eigensolver or the library's ladder helpers.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cplx = std::complex<double>;

struct SpinOps {
  Mat x, y, z;
};

// Collective operators on the Dicke basis, index i <-> m = i - N/2.
inline SpinOps dicke_ops(int N) {
  const int d = N + 1;
  const double j = N / 2.0;
  Mat jp = Mat::Zero(d, d), jz = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = i - j;
    jz(i, i) = m;
    if (i + 1 < d) jp(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Mat jm = jp.adjoint();
  return {(jp + jm) / 2.0, (jp - jm) / cplx(0.0, 2.0), jz};
}

inline Mat hamiltonian(int N, double a, double c, int sign = 1) {
  const SpinOps J = dicke_ops(N);
  return a * J.x + (sign * c / N) * J.z * J.z;
}

// exp(M) by scaling and squaring with a degree-24 Taylor series.
inline Mat expm(const Mat& M) {
  const double norm = M.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  while (norm / std::pow(2.0, s) > 0.25) ++s;
  const Mat A = M / std::pow(2.0, s);
  Mat term = Mat::Identity(M.rows(), M.cols());
  Mat sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * A / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

inline Mat unitary(const Mat& H, double t) { return expm(cplx(0.0, -t) * H); }

// Product state of N spin-1/2 (up amplitude cos(theta/2), down amplitude
// e^{i phi} sin(theta/2)) expanded in the full 2^N space and projected onto
// the symmetric Dicke states.
inline Vec product_state_in_dicke_basis(int N, double theta, double phi) {
  const cplx up = std::cos(theta / 2), dn = std::polar(std::sin(theta / 2), phi);
  const std::size_t dim = std::size_t{1} << N;
  std::vector<cplx> full(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    cplx amp = 1.0;
    for (int q = 0; q < N; ++q) amp *= ((b >> q) & 1U) ? up : dn;
    full[b] = amp;
  }
  Vec out = Vec::Zero(N + 1);
  std::vector<double> count(N + 1, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    const int k = __builtin_popcountll(b);
    out(k) += full[b];
    count[k] += 1.0;
  }
  // |D_k> = (sum over strings with k ups) / sqrt(C(N,k)).
  for (int k = 0; k <= N; ++k) out(k) /= std::sqrt(count[k]);
  return out;
}

inline double expect(const Vec& psi, const Mat& op) { return psi.dot(op * psi).real(); }

// Symmetrized second moments and means straight from dense matrices.
struct Moments {
  double first[3];
  double second[3][3];
};

inline Moments moments(const Vec& psi, int N) {
  const SpinOps J = dicke_ops(N);
  const Mat* ops[3] = {&J.x, &J.y, &J.z};
  Moments m{};
  for (int k = 0; k < 3; ++k) {
    m.first[k] = expect(psi, *ops[k]);
    for (int l = 0; l < 3; ++l) {
      const Mat sym = (*ops[k] * *ops[l] + *ops[l] * *ops[k]) / 2.0;
      m.second[k][l] = expect(psi, sym);
    }
  }
  return m;
}

}  // namespace oracle
