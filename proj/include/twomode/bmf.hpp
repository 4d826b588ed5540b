#pragma once

#include <array>
#include <span>
#include <vector>

#include "twomode/model.hpp"
#include "twomode/spin.hpp"

namespace twomode {

// s = 2<J>/N and Delta_lk = 4(<J_l J_k + J_k J_l> - 2<J_l><J_k>)/N^2.
struct BmfState {
  enum Index { sx, sy, sz, dxz, dyz, dxy, dxx, dyy, dzz };
  std::array<double, 9> v{};

  double operator[](Index i) const { return v[i]; }
  double& operator[](Index i) { return v[i]; }
  bool finite() const;
};

BmfState bmf_initial(int N, double theta, double phi);
BmfState bmf_from_moments(const SpinMoments& m, int N);
// Right-hand side of the nine moment equations at field a and twist c.
BmfState bmf_derivative(const BmfState& state, double a_value, double c);

struct BmfSample {
  double t = 0.0;
  BmfState state;
};

// Advances between two times; uses sign*c as the twist.
BmfState bmf_advance(const BmfState& state, const ModelParams& params, double t0, double t1, double dt);
std::vector<BmfSample> integrate_bmf(const BmfState& init, const ModelParams& params, double t_end, double dt);
// Same, sampled on an explicit grid starting at t=0.
std::vector<BmfSample> integrate_bmf_on(const BmfState& init, const ModelParams& params,
                                        std::span<const double> times, double dt);

CovarianceMatrix covariance_b(const BmfState& state, int N);
double f_b(const BmfState& state, int N);

}  // namespace twomode
