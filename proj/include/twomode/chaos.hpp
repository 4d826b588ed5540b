#pragma once

#include <span>
#include <vector>

#include "twomode/model.hpp"
#include "twomode/parallel.hpp"

namespace twomode {

struct BlochVector {
  double x = 1.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  BlochVector normalized() const;
};

BlochVector mf_derivative(const BlochVector& s, double a_value, double c);

// Mean-field steps are finer than the moment tiers' defaults: the |s| = 1
// invariant has to hold to 1e-9 over 500 periods.
struct MfOptions {
  StepPolicy policy{2e-3, 5e-5, 10};
};

// One drive period from t = 0 to T (the flow is T-periodic).
BlochVector mf_period(const BlochVector& s, const ModelParams& params, const MfOptions& opts = {});
BlochVector mf_advance(const BlochVector& s, const ModelParams& params, double t0, double t1,
                       const MfOptions& opts = {});
// Stroboscopic samples at t = nT for n = 0..n_periods.
std::vector<BlochVector> integrate_mf(const BlochVector& s0, const ModelParams& params, int n_periods,
                                      const MfOptions& opts = {});

struct LyapunovResult {
  double lambda_L = 0.0;  // per unit time
  int m = 0;
  double delta0 = 0.0;
  bool projected = false;  // s0 was moved onto the sphere
};

LyapunovResult lyapunov(const ModelParams& params, const BlochVector& s0, int m = 500, double delta0 = 1e-5,
                        const MfOptions& opts = {});

struct LyapunovMap {
  std::vector<double> A;
  std::vector<double> c;
  std::vector<double> lambda;  // row-major, A outer

  double at(std::size_t i, std::size_t j) const { return lambda[i * c.size() + j]; }
};

LyapunovMap lyapunov_map(std::span<const double> A_grid, std::span<const double> c_grid, const BlochVector& s0,
                         int m = 500, double delta0 = 1e-5, double tau0 = 1.0, double tau1 = 0.01,
                         Execution exec = Execution::parallel, const MfOptions& opts = {});

struct PoincarePoint {
  double phi = 0.0;
  double s_z = 0.0;
  int seed_id = 0;
  int period_index = 0;
};

// n x n seeds at cell midpoints of (phi, s_z) in (-pi, pi] x [-1, 1].
std::vector<BlochVector> default_seed_grid(int n = 20);

std::vector<PoincarePoint> poincare_section(const ModelParams& params, std::span<const BlochVector> seeds,
                                            int n_periods, Execution exec = Execution::parallel,
                                            const MfOptions& opts = {});

// Island-counting proxy: fraction of seeds whose companion (offset by delta
// along e_phi) stays within `threshold` for all n_periods.
double regular_fraction(const ModelParams& params, std::span<const BlochVector> seeds, int n_periods,
                        double delta = 1e-8, double threshold = 1e-3, Execution exec = Execution::parallel,
                        const MfOptions& opts = {});

}  // namespace twomode
