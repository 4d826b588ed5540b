#include "twomode/exact.hpp"

#include <cmath>

#include "twomode/errors.hpp"
#include "twomode/kernels.hpp"

namespace twomode {

TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, double a_value) {
  params.validate();
  const int N = params.N;
  TridiagonalHamiltonian H;
  H.diag.resize(N + 1);
  H.offdiag.resize(N);
  const double twist = params.twist() / N;
  for (int i = 0; i <= N; ++i) {
    const double mu = i - 0.5 * N;
    H.diag[i] = twist * mu * mu;
  }
  for (int i = 0; i < N; ++i) H.offdiag[i] = 0.5 * a_value * ladder_coefficient(N, i - 0.5 * N);
  return H;
}

void tridiagonal_apply(const TridiagonalHamiltonian& H, std::span<const cplx> x, std::span<cplx> y) {
  const std::size_t n = H.diag.size();
  if (x.size() != n || y.size() != n) throw DimensionError("tridiagonal_apply: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = H.diag[i] * x[i];
    if (i > 0) s += H.offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) s += H.offdiag[i] * x[i + 1];
    y[i] = s;
  }
}

Propagator make_propagator(const ModelParams& params, double a_value) {
  const TridiagonalHamiltonian H = build_hamiltonian(params, a_value);
  const Eigen::Map<const Eigen::VectorXd> d(H.diag.data(), static_cast<Eigen::Index>(H.diag.size()));
  const Eigen::Map<const Eigen::VectorXd> e(H.offdiag.data(), static_cast<Eigen::Index>(H.offdiag.size()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw IntegratorError("tridiagonal eigensolver did not converge", 0.0);
  Propagator p;
  p.eigenvalues = solver.eigenvalues();
  p.eigenvectors = solver.eigenvectors();
  p.a_value = a_value;
  p.c = params.c;
  p.N = params.N;
  p.sign = params.interaction_sign;
  return p;
}

DickeState propagate_const(const DickeState& psi, const Propagator& H, double t, Execution exec) {
  if (psi.N != H.N) throw DimensionError("propagate_const: propagator built for a different N");
  DickeState out(psi.N);
  kernels::spectral_apply(exec, H.eigenvectors, H.eigenvalues, t, psi.amp, out.amp);
  return out;
}

void apply_twist(DickeState& psi, double signed_c, double t) {
  const double w = signed_c / psi.N * t;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    const double mu = psi.mu(i);
    psi.amp[i] *= std::polar(1.0, -w * mu * mu);
  }
}

FloquetStepper::FloquetStepper(const ModelParams& params, Execution exec) : params_(params), exec_(exec) {
  params.validate();
  if (params.drive.kind != DriveKind::kicked) throw ParameterError("FloquetStepper: drive must be kicked");
  kick_ = make_propagator(params, params.drive.pulse_amplitude());
  ModelParams rot = params;
  rot.c = 0.0;
  jx_ = make_propagator(rot, 1.0);
}

DickeState FloquetStepper::step_rect(const DickeState& psi) const {
  DickeState out = propagate_const(psi, kick_, params_.drive.tau1, exec_);
  apply_twist(out, params_.twist(), params_.drive.tau0);
  return out;
}

DickeState FloquetStepper::step_delta(const DickeState& psi) const {
  DickeState out = propagate_const(psi, jx_, params_.drive.A * params_.drive.T, exec_);
  apply_twist(out, params_.twist(), params_.drive.T);
  return out;
}

DickeState floquet_step_rect(const DickeState& psi, const ModelParams& params) {
  return FloquetStepper(params).step_rect(psi);
}

DickeState floquet_step_delta(const DickeState& psi, const ModelParams& params) {
  return FloquetStepper(params).step_delta(psi);
}

RampIntegrator::RampIntegrator(const ModelParams& params, double dt) : params_(params), dt_(dt) {
  params.validate();
  if (params.drive.kind != DriveKind::ramp) throw ParameterError("RampIntegrator: drive must be a ramp");
  if (!(dt > 0.0)) throw ParameterError("RampIntegrator: dt must be positive");
}

void RampIntegrator::rhs(const DickeState& psi, double t, double shift, std::span<cplx> out) const {
  const int N = psi.N;
  const double a = params_.drive.v * t;
  const double twist = params_.twist() / N;
  const std::size_t n = psi.dim();
  const cplx minus_i(0.0, -1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = psi.mu(i);
    cplx s = (twist * mu * mu - shift) * psi.amp[i];
    if (i > 0) s += 0.5 * a * ladder_coefficient(N, psi.mu(i - 1)) * psi.amp[i - 1];
    if (i + 1 < n) s += 0.5 * a * ladder_coefficient(N, mu) * psi.amp[i + 1];
    out[i] = minus_i * s;
  }
}

double RampIntegrator::step(DickeState& psi, double t) const {
  const std::size_t n = psi.dim();
  const double h = dt_;
  // Energy shift at the start of the step.
  std::vector<cplx> k1(n), k2(n), k3(n), k4(n);
  rhs(psi, t, 0.0, k1);
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) shift += (std::conj(psi.amp[i]) * (cplx(0.0, 1.0) * k1[i])).real();
  rhs(psi, t, shift, k1);
  DickeState tmp(psi.N);
  for (std::size_t i = 0; i < n; ++i) tmp.amp[i] = psi.amp[i] + 0.5 * h * k1[i];
  rhs(tmp, t + h / 2, shift, k2);
  for (std::size_t i = 0; i < n; ++i) tmp.amp[i] = psi.amp[i] + 0.5 * h * k2[i];
  rhs(tmp, t + h / 2, shift, k3);
  for (std::size_t i = 0; i < n; ++i) tmp.amp[i] = psi.amp[i] + h * k3[i];
  rhs(tmp, t + h, shift, k4);
  for (std::size_t i = 0; i < n; ++i) psi.amp[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  const double n2 = psi.norm_squared();
  const double drift = std::abs(std::sqrt(n2) - 1.0);
  if (!std::isfinite(n2)) throw DivergenceError("ramp integrator produced a non-finite state", t + h);
  if (drift > 1e-6) throw StepSizeError("ramp step norm drift " + std::to_string(drift) + " exceeds 1e-6", t + h);
  psi.normalize();
  return drift;
}

std::vector<TimedState> evolve_ramp(const DickeState& psi, const ModelParams& params, double t_end, double dt,
                                    std::size_t record_every) {
  if (record_every == 0) throw ParameterError("evolve_ramp: record_every must be >= 1");
  const RampIntegrator rk(params, dt);
  const auto steps = static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
  std::vector<TimedState> out;
  DickeState cur = psi;
  out.push_back({0.0, cur});
  for (std::size_t k = 0; k < steps; ++k) {
    rk.step(cur, k * dt);
    if ((k + 1) % record_every == 0) out.push_back({(k + 1) * dt, cur});
  }
  return out;
}

ExactEvolver::ExactEvolver(const ModelParams& params, double ramp_dt, Execution exec)
    : params_(params), ramp_dt_(ramp_dt), exec_(exec) {
  params.validate();
  if (params.drive.kind == DriveKind::constant) driven_ = make_propagator(params, params.drive.A);
  if (params.drive.kind == DriveKind::kicked) driven_ = make_propagator(params, params.drive.pulse_amplitude());
}

void ExactEvolver::advance(DickeState& psi, double t0, double t1) const {
  if (psi.N != params_.N) throw DimensionError("ExactEvolver: state has a different N");
  for (const DriveSegment& seg : drive_segments(params_.drive, t0, t1)) {
    if (seg.ramp) {
      const int n = std::max(1, static_cast<int>(std::ceil(seg.length() / ramp_dt_ - 1e-9)));
      const RampIntegrator rk(params_, seg.length() / n);
      for (int k = 0; k < n; ++k) rk.step(psi, seg.t0 + k * (seg.length() / n));
    } else if (seg.a == 0.0) {
      apply_twist(psi, params_.twist(), seg.length());
    } else {
      psi = propagate_const(psi, *driven_, seg.length(), exec_);
    }
  }
}

std::vector<ExactSample> qfi_trajectory(const ModelParams& params, const DickeState& psi0,
                                        std::span<const double> sample_times, bool keep_amplitudes,
                                        double ramp_dt, Execution exec) {
  for (std::size_t i = 1; i < sample_times.size(); ++i)
    if (!(sample_times[i] >= sample_times[i - 1])) throw ParameterError("qfi_trajectory: sample grid not monotone");
  const ExactEvolver evolver(params, ramp_dt, exec);
  std::vector<ExactSample> out;
  out.reserve(sample_times.size());
  DickeState psi = psi0;
  double t = 0.0;
  for (const double ts : sample_times) {
    evolver.advance(psi, t, ts);
    t = ts;
    ExactSample s;
    s.t = ts;
    s.moments = spin_moments(psi);
    s.F_Q = qfi(covariance_q(s.moments));
    if (keep_amplitudes) s.amplitudes = psi.amp;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace twomode
