#include "twomode/bmf.hpp"

#include <cmath>

#include "twomode/errors.hpp"
#include "twomode/ode.hpp"

namespace twomode {

bool BmfState::finite() const {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

BmfState bmf_from_moments(const SpinMoments& m, int N) {
  const double s = 2.0 / N;
  const double d = 4.0 / (static_cast<double>(N) * N);
  auto delta = [&](int k, int l) { return d * (2 * m.second(k, l) - 2 * m.first[k] * m.first[l]); };
  BmfState b;
  b[BmfState::sx] = s * m.first[0];
  b[BmfState::sy] = s * m.first[1];
  b[BmfState::sz] = s * m.first[2];
  b[BmfState::dxz] = delta(0, 2);
  b[BmfState::dyz] = delta(1, 2);
  b[BmfState::dxy] = delta(0, 1);
  b[BmfState::dxx] = delta(0, 0);
  b[BmfState::dyy] = delta(1, 1);
  b[BmfState::dzz] = delta(2, 2);
  return b;
}

BmfState bmf_initial(int N, double theta, double phi) {
  if (N < 1) throw ParameterError("bmf_initial: N must be >= 1");
  // Closed-form moments of the coherent state: mean n N/2, variance
  // (N/4)(I - n n^T).
  const std::array<double, 3> n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  const double var = 2.0 / N;
  auto delta = [&](int k, int l) { return var * ((k == l ? 1.0 : 0.0) - n[k] * n[l]); };
  BmfState b;
  b[BmfState::sx] = n[0];
  b[BmfState::sy] = n[1];
  b[BmfState::sz] = n[2];
  b[BmfState::dxz] = delta(0, 2);
  b[BmfState::dyz] = delta(1, 2);
  b[BmfState::dxy] = delta(0, 1);
  b[BmfState::dxx] = delta(0, 0);
  b[BmfState::dyy] = delta(1, 1);
  b[BmfState::dzz] = delta(2, 2);
  return b;
}

BmfState bmf_derivative(const BmfState& st, double a, double c) {
  const double x = st[BmfState::sx], y = st[BmfState::sy], z = st[BmfState::sz];
  const double xz = st[BmfState::dxz], yz = st[BmfState::dyz], xy = st[BmfState::dxy];
  const double xx = st[BmfState::dxx], yy = st[BmfState::dyy], zz = st[BmfState::dzz];
  const double w = c * x - a;
  BmfState r;
  r[BmfState::sx] = -c * z * y - 0.5 * c * yz;
  r[BmfState::sy] = c * z * x - a * z + 0.5 * c * xz;
  r[BmfState::sz] = a * y;
  r[BmfState::dxz] = -c * z * yz + a * xy - c * y * zz;
  r[BmfState::dyz] = c * z * xz + a * yy + w * zz;
  r[BmfState::dxy] = w * xz - c * y * yz + c * z * (xx - yy);
  r[BmfState::dxx] = -2 * c * y * xz - 2 * c * z * xy;
  r[BmfState::dyy] = 2 * w * yz + 2 * c * z * xy;
  r[BmfState::dzz] = 2 * a * yz;
  return r;
}

BmfState bmf_advance(const BmfState& state, const ModelParams& params, double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw ParameterError("bmf: dt must be positive");
  const double c = params.twist();
  auto f = [c](const OdeVec<9>& y, double a) { return bmf_derivative(BmfState{y}, a, c).v; };
  auto guard = [](const OdeVec<9>& y, double t) {
    for (double x : y)
      if (!std::isfinite(x)) throw DivergenceError("BMF state became non-finite", t);
  };
  BmfState out;
  out.v = advance_driven(state.v, params.drive, t0, t1, StepPolicy::from_dt(dt), f, guard);
  return out;
}

std::vector<BmfSample> integrate_bmf_on(const BmfState& init, const ModelParams& params,
                                        std::span<const double> times, double dt) {
  params.validate();
  std::vector<BmfSample> out;
  out.reserve(times.size());
  BmfState cur = init;
  double t = 0.0;
  for (double ts : times) {
    cur = bmf_advance(cur, params, t, ts, dt);
    t = ts;
    out.push_back({ts, cur});
  }
  return out;
}

std::vector<BmfSample> integrate_bmf(const BmfState& init, const ModelParams& params, double t_end, double dt) {
  const std::vector<double> grid = make_time_grid(params.drive, t_end, dt);
  return integrate_bmf_on(init, params, grid, dt);
}

CovarianceMatrix covariance_b(const BmfState& st, int N) {
  const double f = static_cast<double>(N) * N / 8;
  return CovarianceMatrix({f * st[BmfState::dxx], f * st[BmfState::dyy], f * st[BmfState::dzz],
                           f * st[BmfState::dxy], f * st[BmfState::dxz], f * st[BmfState::dyz]});
}

double f_b(const BmfState& state, int N) { return 4 * covariance_b(state, N).max_eigenvalue(); }

}  // namespace twomode
