#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles/dense.hpp"
#include "twomode/errors.hpp"
#include "twomode/exact.hpp"

using namespace twomode;
constexpr double pi = std::numbers::pi;

namespace {

oracle::Vec to_vec(const DickeState& s) {
  oracle::Vec v(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v(i) = s.amp[i];
  return v;
}

double distance(const oracle::Vec& a, const DickeState& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < b.dim(); ++i) m = std::max(m, std::abs(a(i) - b.amp[i]));
  return m;
}

ModelParams kicked(int N, double A, double c) {
  ModelParams p;
  p.N = N;
  p.c = c;
  p.drive = DriveProtocol::kicked(A);
  return p;
}

}  // namespace

TEST_CASE("tridiagonal Hamiltonian equals the dense one") {
  for (int sign : {1, -1}) {
    ModelParams p;
    p.N = 7;
    p.c = 1.3;
    p.interaction_sign = sign;
    const TridiagonalHamiltonian H = build_hamiltonian(p, 0.8);
    const oracle::Mat D = oracle::hamiltonian(7, 0.8, 1.3, sign);
    for (int i = 0; i <= 7; ++i) {
      CHECK(H.diag[i] == doctest::Approx(D(i, i).real()));
      if (i < 7) {
        CHECK(H.offdiag[i] == doctest::Approx(D(i, i + 1).real()));
        CHECK(H.offdiag[i] >= 0.0);
      }
    }
  }
}

TEST_CASE("eigendecomposition is orthogonal and accurate") {
  ModelParams p;
  p.N = 200;
  p.c = pi;
  const Propagator prop = make_propagator(p, 127.0);
  const Eigen::MatrixXd& V = prop.eigenvectors;
  const double ortho = (V.transpose() * V - Eigen::MatrixXd::Identity(201, 201)).cwiseAbs().maxCoeff();
  CHECK(ortho < 1e-10);
  const TridiagonalHamiltonian H = build_hamiltonian(p, 127.0);
  double hnorm = 0.0, resid = 0.0;
  for (double d : H.diag) hnorm = std::max(hnorm, std::abs(d));
  for (double o : H.offdiag) hnorm = std::max(hnorm, 2 * o);
  for (int k = 0; k < 201; k += 20) {
    std::vector<cplx> v(201), hv(201);
    for (int i = 0; i < 201; ++i) v[i] = V(i, k);
    tridiagonal_apply(H, v, hv);
    for (int i = 0; i < 201; ++i) resid = std::max(resid, std::abs(hv[i] - prop.eigenvalues(k) * v[i]));
  }
  CHECK(resid < 1e-9 * hnorm);
}

TEST_CASE("constant-field propagation matches the dense exponential") {
  for (int N : {1, 2, 5, 8}) {
    ModelParams p;
    p.N = N;
    p.c = 2.1;
    const DickeState psi = coherent_state(N, 1.0, 0.5);
    const DickeState out = propagate_const(psi, make_propagator(p, 0.9), 1.7);
    CHECK(distance(oracle::unitary(oracle::hamiltonian(N, 0.9, 2.1), 1.7) * to_vec(psi), out) < 1e-9);
  }
}

TEST_CASE("twist phases match the dense exponential") {
  const int N = 6;
  DickeState psi = coherent_state(N, 0.7, 0.1);
  const oracle::Vec ref = oracle::unitary(oracle::hamiltonian(N, 0.0, -1.4, 1), 2.0) * to_vec(psi);
  apply_twist(psi, -1.4, 2.0);
  CHECK(distance(ref, psi) < 1e-12);
}

TEST_CASE("Floquet steps match dense products") {
  const int N = 8;
  const ModelParams p = kicked(N, 0.4 * pi, 1.4 * pi);
  const DickeState psi = coherent_state(N, pi / 2, 0.0);
  const oracle::Mat Ut = oracle::unitary(oracle::hamiltonian(N, 0.0, p.c), 1.0);
  const oracle::Mat Uk = oracle::unitary(oracle::hamiltonian(N, p.drive.pulse_amplitude(), p.c), 0.01);
  CHECK(distance(Ut * (Uk * to_vec(psi)), floquet_step_rect(psi, p)) < 1e-9);
  const oracle::Mat Ux = oracle::unitary(oracle::hamiltonian(N, 1.0, 0.0), p.drive.A * p.drive.T);
  const oracle::Mat Ud = oracle::unitary(oracle::hamiltonian(N, 0.0, p.c), p.drive.T);
  CHECK(distance(Ud * (Ux * to_vec(psi)), floquet_step_delta(psi, p)) < 1e-9);
}

TEST_CASE("Floquet stepping preserves the norm") {
  const ModelParams p = kicked(300, 0.4 * pi, 1.4 * pi);
  const FloquetStepper step(p);
  DickeState psi = coherent_state(300, pi / 2, 0.0);
  for (int n = 0; n < 20; ++n) psi = step.step_rect(psi);
  CHECK(std::abs(psi.norm_squared() - 1) < 1e-12);
}

TEST_CASE("evolver over whole periods equals the stepper") {
  const ModelParams p = kicked(40, 0.4 * pi, 0.8 * pi);
  const FloquetStepper step(p);
  DickeState a = coherent_state(40, pi / 2, 0.0), b = a;
  for (int n = 0; n < 3; ++n) a = step.step_rect(a);
  ExactEvolver(p).advance(b, 0.0, 3 * p.drive.T);
  for (std::size_t i = 0; i < a.dim(); ++i) CHECK(std::abs(a.amp[i] - b.amp[i]) < 1e-10);
}

TEST_CASE("evolver is additive across split intervals") {
  const ModelParams p = kicked(30, 0.4 * pi, 0.8 * pi);
  const ExactEvolver ev(p);
  DickeState a = coherent_state(30, 1.0, 0.2), b = a;
  ev.advance(a, 0.0, 2.5);
  ev.advance(b, 0.0, 1.005);
  ev.advance(b, 1.005, 2.5);
  for (std::size_t i = 0; i < a.dim(); ++i) CHECK(std::abs(a.amp[i] - b.amp[i]) < 1e-10);
}

TEST_CASE("ramp integration tracks a fine dense reference") {
  const int N = 6;
  ModelParams p;
  p.N = N;
  p.c = 1.0;
  p.interaction_sign = -1;
  p.drive = DriveProtocol::ramp(0.5);
  const DickeState psi0 = dicke_basis_state(N, N / 2.0);
  const auto traj = evolve_ramp(psi0, p, 2.0, 1e-3, 2000);
  REQUIRE(traj.back().t == doctest::Approx(2.0));
  oracle::Vec ref = to_vec(psi0);
  const int steps = 4000;
  const double h = 2.0 / steps;
  for (int k = 0; k < steps; ++k)
    ref = oracle::unitary(oracle::hamiltonian(N, 0.5 * (k + 0.5) * h, 1.0, -1), h) * ref;
  // The integrator removes the dynamical phase, so compare up to a global phase.
  const cplx overlap = ref.dot(to_vec(traj.back().psi));
  CHECK(1.0 - std::abs(overlap) < 1e-9);
}

TEST_CASE("ramp integrator reports its norm drift") {
  ModelParams p;
  p.N = 20;
  p.c = 1.0;
  p.interaction_sign = -1;
  p.drive = DriveProtocol::ramp(1e-3);
  const RampIntegrator rk(p, 5e-3);
  DickeState psi = dicke_basis_state(20, 10);
  CHECK(rk.step(psi, 0.0) < 1e-6);
  CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(RampIntegrator(kicked(4, 1, 1), 0.01), ParameterError);
}

TEST_CASE("OAT landmark at N pi / 2c") {
  const int N = 20;
  ModelParams p;
  p.N = N;
  p.c = pi;
  const std::vector<double> ts{0.0, N * pi / (2 * p.c)};
  const auto s = qfi_trajectory(p, coherent_state(N, pi / 2, 0.0), ts);
  CHECK(s[0].F_Q == doctest::Approx(N).epsilon(1e-12));
  CHECK(s[1].F_Q == doctest::Approx(N * N).epsilon(1e-9));
}

TEST_CASE("constant drive conserves energy") {
  ModelParams p;
  p.N = 50;
  p.c = pi;
  p.drive = DriveProtocol::constant(pi / 2);
  const TridiagonalHamiltonian H = build_hamiltonian(p, p.drive.A);
  auto energy = [&](const DickeState& s) {
    std::vector<cplx> hs(s.dim());
    tridiagonal_apply(H, s.amp, hs);
    cplx e = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) e += std::conj(s.amp[i]) * hs[i];
    return e.real();
  };
  DickeState psi = coherent_state(50, pi / 2, 0.0);
  const double e0 = energy(psi);
  ExactEvolver(p).advance(psi, 0.0, 7.3);
  CHECK(energy(psi) == doctest::Approx(e0).epsilon(1e-10));
}

TEST_CASE("errors") {
  ModelParams p;
  p.N = 10;
  p.c = 1.0;
  const Propagator prop = make_propagator(p, 1.0);
  CHECK_THROWS_AS(propagate_const(coherent_state(8, 1.0, 0.0), prop, 1.0), DimensionError);
  const std::vector<double> bad{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(qfi_trajectory(p, coherent_state(10, 1.0, 0.0), bad), ParameterError);
  CHECK_THROWS_AS(FloquetStepper{p}, ParameterError);
}
