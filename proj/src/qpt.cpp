#include "twomode/qpt.hpp"

#include <cmath>
#include <limits>

#include "twomode/bmf.hpp"
#include "twomode/errors.hpp"
#include "twomode/exact.hpp"
#include "twomode/spin.hpp"

namespace twomode {

SweepResult adiabatic_sweep(const SweepOptions& opts) {
  if (opts.N < 1) throw ParameterError("adiabatic_sweep: N must be >= 1");
  if (!(opts.v > 0.0)) throw ParameterError("adiabatic_sweep: v must be positive");
  if (!(opts.dt > 0.0)) throw ParameterError("adiabatic_sweep: dt must be positive");
  if (!(opts.A_max > 0.0)) throw ParameterError("adiabatic_sweep: A_max must be positive");
  if (opts.pole != 1 && opts.pole != -1) throw ParameterError("adiabatic_sweep: pole must be +1 or -1");
  if (opts.sample_every < 1) throw ParameterError("adiabatic_sweep: sample_every must be >= 1");

  ModelParams params;
  params.N = opts.N;
  params.c = opts.c;
  params.interaction_sign = -1;
  params.drive = DriveProtocol::ramp(opts.v);

  const bool run_exact = opts.tier != SweepTier::bmf;
  const bool run_bmf = opts.tier != SweepTier::exact;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  DickeState psi = dicke_basis_state(opts.N, opts.pole * 0.5 * opts.N);
  BmfState bmf = bmf_from_moments(spin_moments(psi), opts.N);
  const RampIntegrator rk(params, opts.dt);
  const auto steps = static_cast<long long>(std::llround(opts.A_max / opts.v / opts.dt));

  SweepResult res;
  auto record = [&](double t) {
    SweepSample s{t, opts.v * t, nan, nan, nan, nan};
    if (run_exact) {
      const SpinMoments m = spin_moments(psi);
      s.sz_exact = 2 * m.first[2] / opts.N;
      s.F_Q = qfi(covariance_q(m));
    }
    if (run_bmf) {
      s.sz_bmf = bmf[BmfState::sz];
      s.F_B = f_b(bmf, opts.N);
    }
    res.samples.push_back(s);
  };
  record(0.0);
  double t_prev = 0.0;
  for (long long k = 0; k < steps; ++k) {
    const double t = k * opts.dt;
    if (run_exact) rk.step(psi, t);
    if ((k + 1) % opts.sample_every == 0 || k + 1 == steps) {
      const double tn = (k + 1) * opts.dt;
      if (run_bmf) {
        bmf = bmf_advance(bmf, params, t_prev, tn, opts.dt);
        t_prev = tn;
      }
      record(tn);
    }
  }
  if (run_exact) res.star_Q = pseudo_critical_point(res, SweepTier::exact);
  if (run_bmf) res.star_B = pseudo_critical_point(res, SweepTier::bmf);
  return res;
}

CriticalPoint parabolic_peak(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.empty() || x.size() != y.size()) throw ParameterError("parabolic_peak: empty or mismatched series");
  std::size_t k = 0;
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] > y[k]) k = i;
  if (k == 0 || k + 1 == y.size()) return {x[k], true};
  const double x0 = x[k - 1], x1 = x[k], x2 = x[k + 1];
  const double y0 = y[k - 1], y1 = y[k], y2 = y[k + 1];
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (den == 0.0) return {x1, false};
  return {x1 - 0.5 * num / den, false};
}

CriticalPoint pseudo_critical_point(const SweepResult& result, SweepTier tier) {
  if (tier == SweepTier::both) throw ParameterError("pseudo_critical_point: choose exact or bmf");
  std::vector<double> A, F;
  for (const SweepSample& s : result.samples) {
    const double f = tier == SweepTier::exact ? s.F_Q : s.F_B;
    if (std::isnan(f)) continue;
    A.push_back(s.A);
    F.push_back(f);
  }
  if (F.empty()) throw ParameterError("pseudo_critical_point: no samples for this tier");
  return parabolic_peak(A, F);
}

}  // namespace twomode
