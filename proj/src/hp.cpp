#include "twomode/hp.hpp"

#include <algorithm>
#include <cmath>

#include "twomode/errors.hpp"
#include "twomode/ode.hpp"

namespace twomode {

HpMoments hp_derivative(const HpMoments& m, double a, double c) {
  return {-2 * a * m.qp, 2 * (a - c) * m.qp, -a * m.pp + (a - c) * m.qq};
}

double n_exc(const HpMoments& m) { return (m.qq + m.pp - 1) / 2; }

double f_hp(double n, int N) {
  // Rounding can leave n at -1e-17 on the initial state.
  if (n < -1e-12) throw DomainError("f_hp: negative excitation number");
  n = std::max(n, 0.0);
  return N * (1 + 2 * n + 2 * std::sqrt(n * (n + 1)));
}

HpMoments hp_advance(const HpMoments& m, const ModelParams& params, double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw ParameterError("hp: dt must be positive");
  const double c = params.twist();
  auto f = [c](const OdeVec<3>& y, double a) {
    const HpMoments r = hp_derivative({y[0], y[1], y[2]}, a, c);
    return OdeVec<3>{r.qq, r.pp, r.qp};
  };
  auto guard = [](const OdeVec<3>& y, double t) {
    for (double x : y)
      if (!std::isfinite(x)) throw DivergenceError("HP moments overflowed", t);
  };
  const OdeVec<3> y = advance_driven(OdeVec<3>{m.qq, m.pp, m.qp}, params.drive, t0, t1,
                                     StepPolicy::from_dt(dt), f, guard);
  return {y[0], y[1], y[2]};
}

std::vector<HpSample> integrate_hp_on(const HpMoments& init, const ModelParams& params,
                                      std::span<const double> times, double dt) {
  params.validate();
  std::vector<HpSample> out;
  out.reserve(times.size());
  HpMoments cur = init;
  double t = 0.0;
  for (double ts : times) {
    cur = hp_advance(cur, params, t, ts, dt);
    t = ts;
    const double n = n_exc(cur);
    out.push_back({ts, cur, n, f_hp(n, params.N), n <= params.N / 10.0});
  }
  return out;
}

std::vector<HpSample> integrate_hp(const HpMoments& init, const ModelParams& params, double t_end, double dt) {
  const std::vector<double> grid = make_time_grid(params.drive, t_end, dt);
  return integrate_hp_on(init, params, grid, dt);
}

}  // namespace twomode
