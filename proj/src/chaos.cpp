#include "twomode/chaos.hpp"

#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"
#include "twomode/ode.hpp"

namespace twomode {

namespace {

OdeVec<3> as_vec(const BlochVector& s) { return {s.x, s.y, s.z}; }
BlochVector as_bloch(const OdeVec<3>& v) { return {v[0], v[1], v[2]}; }

BlochVector sub(const BlochVector& a, const BlochVector& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
BlochVector add_scaled(const BlochVector& a, double f, const BlochVector& b) {
  return {a.x + f * b.x, a.y + f * b.y, a.z + f * b.z};
}
double dot(const BlochVector& a, const BlochVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

void require_kicked(const ModelParams& params) {
  params.validate();
  if (params.drive.kind != DriveKind::kicked) throw ParameterError("mean-field maps need a kicked drive");
}

// Unit tangent at s used for the initial companion offset: the tangential part
// of x-hat, or of (y-hat + z-hat)/sqrt2 when s lies on the x axis.
BlochVector initial_direction(const BlochVector& s) {
  for (const BlochVector e : {BlochVector{1.0, 0.0, 0.0}, BlochVector{0.0, std::sqrt(0.5), std::sqrt(0.5)}}) {
    const BlochVector u = add_scaled(e, -dot(e, s), s);
    if (u.norm() > 1e-6) return u.normalized();
  }
  return BlochVector{0.0, 1.0, 0.0};
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::normalized() const {
  const double n = norm();
  return {x / n, y / n, z / n};
}

BlochVector mf_derivative(const BlochVector& s, double a, double c) {
  return {-c * s.z * s.y, c * s.z * s.x - a * s.z, a * s.y};
}

BlochVector mf_advance(const BlochVector& s, const ModelParams& params, double t0, double t1,
                       const MfOptions& opts) {
  const double c = params.twist();
  auto f = [c](const OdeVec<3>& y, double a) { return as_vec(mf_derivative(as_bloch(y), a, c)); };
  auto guard = [](const OdeVec<3>& y, double t) {
    if (!std::isfinite(y[0] + y[1] + y[2])) throw DivergenceError("mean-field state became non-finite", t);
  };
  return as_bloch(advance_driven(as_vec(s), params.drive, t0, t1, opts.policy, f, guard));
}

BlochVector mf_period(const BlochVector& s, const ModelParams& params, const MfOptions& opts) {
  return mf_advance(s, params, 0.0, params.drive.T, opts);
}

std::vector<BlochVector> integrate_mf(const BlochVector& s0, const ModelParams& params, int n_periods,
                                      const MfOptions& opts) {
  require_kicked(params);
  std::vector<BlochVector> out;
  out.reserve(static_cast<std::size_t>(n_periods) + 1);
  out.push_back(s0);
  const double n0 = s0.norm();
  BlochVector s = s0;
  for (int n = 1; n <= n_periods; ++n) {
    s = mf_period(s, params, opts);
    if (std::abs(s.norm() - n0) > 1e-6)
      throw IntegratorError("mean-field norm drift exceeds 1e-6", n * params.drive.T);
    out.push_back(s);
  }
  return out;
}

LyapunovResult lyapunov(const ModelParams& params, const BlochVector& s0, int m, double delta0,
                        const MfOptions& opts) {
  require_kicked(params);
  if (m < 1) throw ParameterError("lyapunov: m must be >= 1");
  if (!(delta0 > 0.0)) throw ParameterError("lyapunov: delta0 must be positive");
  LyapunovResult res;
  res.m = m;
  res.delta0 = delta0;
  BlochVector s = s0;
  if (std::abs(s.norm() - 1.0) > 1e-12) {
    res.projected = true;
    s = s.normalized();
  }
  BlochVector p = add_scaled(s, delta0, initial_direction(s)).normalized();
  double d_start = sub(p, s).norm();
  double sum = 0.0;
  for (int n = 0; n < m; ++n) {
    s = mf_period(s, params, opts);
    p = mf_period(p, params, opts);
    const BlochVector d = sub(p, s);
    const double dn = d.norm();
    if (!(dn > 0.0)) break;
    sum += std::log(dn / d_start);
    p = add_scaled(s, delta0 / dn, d).normalized();
    d_start = sub(p, s).norm();
  }
  res.lambda_L = sum / (m * params.drive.T);
  return res;
}

LyapunovMap lyapunov_map(std::span<const double> A_grid, std::span<const double> c_grid, const BlochVector& s0,
                         int m, double delta0, double tau0, double tau1, Execution exec, const MfOptions& opts) {
  if (A_grid.empty() || c_grid.empty()) throw ParameterError("lyapunov_map: empty grid");
  LyapunovMap map{{A_grid.begin(), A_grid.end()}, {c_grid.begin(), c_grid.end()}, {}};
  map.lambda.assign(A_grid.size() * c_grid.size(), 0.0);
  for_each_index(exec, map.lambda.size(), [&](std::size_t k) {
    ModelParams p;
    p.c = c_grid[k % c_grid.size()];
    p.drive = DriveProtocol::kicked(A_grid[k / c_grid.size()], tau0, tau1);
    map.lambda[k] = lyapunov(p, s0, m, delta0, opts).lambda_L;
  });
  return map;
}

std::vector<BlochVector> default_seed_grid(int n) {
  if (n < 1) throw ParameterError("default_seed_grid: n must be >= 1");
  std::vector<BlochVector> seeds;
  seeds.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double phi = -std::numbers::pi + (i + 0.5) * 2 * std::numbers::pi / n;
    for (int j = 0; j < n; ++j) {
      const double z = -1.0 + (j + 0.5) * 2.0 / n;
      const double r = std::sqrt(1 - z * z);
      seeds.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
  }
  return seeds;
}

std::vector<PoincarePoint> poincare_section(const ModelParams& params, std::span<const BlochVector> seeds,
                                            int n_periods, Execution exec, const MfOptions& opts) {
  require_kicked(params);
  if (n_periods < 0) throw ParameterError("poincare_section: n_periods must be >= 0");
  const std::size_t per_seed = static_cast<std::size_t>(n_periods) + 1;
  std::vector<PoincarePoint> out(seeds.size() * per_seed);
  for_each_index(exec, seeds.size(), [&](std::size_t k) {
    BlochVector s = seeds[k];
    for (int n = 0; n <= n_periods; ++n) {
      if (n > 0) s = mf_period(s, params, opts);
      out[k * per_seed + n] = {std::atan2(s.y, s.x), s.z, static_cast<int>(k), n};
    }
  });
  return out;
}

double regular_fraction(const ModelParams& params, std::span<const BlochVector> seeds, int n_periods, double delta,
                        double threshold, Execution exec, const MfOptions& opts) {
  require_kicked(params);
  if (seeds.empty()) throw ParameterError("regular_fraction: no seeds");
  std::vector<char> bounded(seeds.size(), 0);
  for_each_index(exec, seeds.size(), [&](std::size_t k) {
    BlochVector s = seeds[k];
    const double phi = std::atan2(s.y, s.x);
    BlochVector p = add_scaled(s, delta, BlochVector{-std::sin(phi), std::cos(phi), 0.0}).normalized();
    bool ok = true;
    for (int n = 0; n < n_periods && ok; ++n) {
      s = mf_period(s, params, opts);
      p = mf_period(p, params, opts);
      ok = sub(p, s).norm() < threshold;
    }
    bounded[k] = ok ? 1 : 0;
  });
  double count = 0.0;
  for (char b : bounded) count += b;
  return count / static_cast<double>(seeds.size());
}

}  // namespace twomode
