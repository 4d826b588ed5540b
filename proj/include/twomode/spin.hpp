#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace twomode {

using cplx = std::complex<double>;

// Amplitudes over the Dicke basis, index i <-> mu = i - N/2.
struct DickeState {
  int N = 0;
  std::vector<cplx> amp;

  DickeState() = default;
  explicit DickeState(int n);

  std::size_t dim() const { return amp.size(); }
  double mu(std::size_t i) const { return static_cast<double>(i) - 0.5 * N; }
  double norm_squared() const;
  void normalize();
};

// The symmetric second moments are ordered xx, yy, zz, xy, xz, yz.
struct SpinMoments {
  std::array<double, 3> first{};
  std::array<double, 6> second_sym{};

  double second(int k, int l) const;
  double variance(int k) const { return second(k, k) - first[k] * first[k]; }
};

// 3x3 real symmetric matrix stored as its six independent entries (same
// ordering as SpinMoments::second_sym), so symmetry holds by construction.
class CovarianceMatrix {
 public:
  CovarianceMatrix() = default;
  explicit CovarianceMatrix(const std::array<double, 6>& e) : e_(e) {}

  double operator()(int k, int l) const { return e_[slot(k, l)]; }
  const std::array<double, 6>& entries() const { return e_; }
  CovarianceMatrix scaled(double f) const;
  std::array<double, 3> eigenvalues() const;  // descending
  double max_eigenvalue() const { return eigenvalues()[0]; }

  static int slot(int k, int l);

 private:
  std::array<double, 6> e_{};
};

struct EntanglementDepth {
  int k_plus_one = 1;
  int s_floor = 0;
  int r_rem = 0;
};

DickeState coherent_state(int N, double theta, double phi);
DickeState dicke_basis_state(int N, double mu);

// Tridiagonal actions of the collective operators (no allocation beyond out).
void apply_jz(const DickeState& in, std::span<cplx> out);
void apply_jplus(const DickeState& in, std::span<cplx> out);
void apply_jminus(const DickeState& in, std::span<cplx> out);
// sqrt(j(j+1) - mu(mu+1)): matrix element <mu+1|J+|mu>.
double ladder_coefficient(int N, double mu);

SpinMoments spin_moments(const DickeState& state);
CovarianceMatrix covariance_q(const SpinMoments& m);
double qfi(const CovarianceMatrix& cov);
double qfi(const DickeState& state);
EntanglementDepth entanglement_depth(double F, int N);

}  // namespace twomode
