#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "twomode/model.hpp"
#include "twomode/parallel.hpp"
#include "twomode/spin.hpp"

namespace twomode {

struct TridiagonalHamiltonian {
  std::vector<double> diag;     // N+1
  std::vector<double> offdiag;  // N, coupling between i and i+1
};

// H = a J_x + sign (c/N) J_z^2
TridiagonalHamiltonian build_hamiltonian(const ModelParams& params, double a_value);

// y = H x for a tridiagonal H.
void tridiagonal_apply(const TridiagonalHamiltonian& H, std::span<const cplx> x, std::span<cplx> y);

struct Propagator {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // columns are eigenvectors
  double a_value = 0.0;
  double c = 0.0;
  int N = 0;
  int sign = 1;
};

Propagator make_propagator(const ModelParams& params, double a_value);

DickeState propagate_const(const DickeState& psi, const Propagator& H, double t,
                           Execution exec = Execution::parallel);

// Diagonal twist exp(-i sign (c/N) J_z^2 t), applied in place.
void apply_twist(DickeState& psi, double signed_c, double t);

// One Floquet period of the kicked drive. Propagators are built once.
class FloquetStepper {
 public:
  explicit FloquetStepper(const ModelParams& params, Execution exec = Execution::parallel);

  // Rectangular pulse of width tau1 followed by free twisting for tau0.
  DickeState step_rect(const DickeState& psi) const;
  // Instantaneous rotation by A T about x followed by twisting for T.
  DickeState step_delta(const DickeState& psi) const;

 private:
  ModelParams params_;
  Execution exec_;
  Propagator kick_;
  Propagator jx_;
};

DickeState floquet_step_rect(const DickeState& psi, const ModelParams& params);
DickeState floquet_step_delta(const DickeState& psi, const ModelParams& params);

// RK4 for i dpsi/dt = H(t) psi with H(t) = v t J_x + sign (c/N) J_z^2.
// Each step is taken in the frame shifted by the instantaneous energy
// <psi|H|psi>, which only changes the global phase but removes the large
// common rotation that otherwise dominates the truncation error.
class RampIntegrator {
 public:
  RampIntegrator(const ModelParams& params, double dt);

  // Advances psi by one step from time t; renormalizes and returns the
  // pre-renormalization norm drift. Throws StepSizeError above 1e-6.
  double step(DickeState& psi, double t) const;
  double dt() const { return dt_; }

 private:
  void rhs(const DickeState& psi, double t, double shift, std::span<cplx> out) const;

  ModelParams params_;
  double dt_;
};

struct TimedState {
  double t = 0.0;
  DickeState psi;
};

std::vector<TimedState> evolve_ramp(const DickeState& psi, const ModelParams& params, double t_end, double dt,
                                    std::size_t record_every = 1);

// Propagates a state along any drive, splitting at pulse edges.
class ExactEvolver {
 public:
  explicit ExactEvolver(const ModelParams& params, double ramp_dt = 0.01, Execution exec = Execution::parallel);

  void advance(DickeState& psi, double t0, double t1) const;
  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  double ramp_dt_;
  Execution exec_;
  std::optional<Propagator> driven_;  // constant field or pulse field
};

struct ExactSample {
  double t = 0.0;
  SpinMoments moments;
  double F_Q = 0.0;
  std::vector<cplx> amplitudes;  // filled only when requested
};

std::vector<ExactSample> qfi_trajectory(const ModelParams& params, const DickeState& psi0,
                                        std::span<const double> sample_times, bool keep_amplitudes = false,
                                        double ramp_dt = 0.01, Execution exec = Execution::parallel);

}  // namespace twomode
