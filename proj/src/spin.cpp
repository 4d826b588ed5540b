#include "twomode/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twomode/errors.hpp"

namespace twomode {

DickeState::DickeState(int n) : N(n), amp(static_cast<std::size_t>(n) + 1) {
  if (n < 1) throw ParameterError("N must be >= 1");
}

double DickeState::norm_squared() const {
  double s = 0.0;
  for (const cplx& z : amp) s += std::norm(z);
  return s;
}

void DickeState::normalize() {
  const double n = std::sqrt(norm_squared());
  for (cplx& z : amp) z /= n;
}

double SpinMoments::second(int k, int l) const { return second_sym[CovarianceMatrix::slot(k, l)]; }

int CovarianceMatrix::slot(int k, int l) {
  if (k == l) return k;
  const int lo = std::min(k, l), hi = std::max(k, l);
  if (lo == 0) return hi == 1 ? 3 : 4;
  return 5;
}

CovarianceMatrix CovarianceMatrix::scaled(double f) const {
  std::array<double, 6> e = e_;
  for (double& x : e) x *= f;
  return CovarianceMatrix(e);
}

namespace {

// Cyclic Jacobi rotations; accurate to machine precision regardless of
// degeneracy.
std::array<double, 3> jacobi_eigenvalues(const std::array<double, 6>& e) {
  double m[3][3] = {{e[0], e[3], e[4]}, {e[3], e[1], e[5]}, {e[4], e[5], e[2]}};
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double off = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (m[p][q] == 0.0) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 3; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
  }
  std::array<double, 3> ev{m[0][0], m[1][1], m[2][2]};
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace

std::array<double, 3> CovarianceMatrix::eigenvalues() const {
  // Trigonometric solution of the symmetric cubic.
  const double a = e_[0], b = e_[1], c = e_[2];
  const double d = e_[3], e = e_[4], f = e_[5];
  const double p1 = d * d + e * e + f * f;
  if (p1 == 0.0) {
    std::array<double, 3> ev{a, b, c};
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
  }
  const double q = (a + b + c) / 3;
  const double p2 = (a - q) * (a - q) + (b - q) * (b - q) + (c - q) * (c - q) + 2 * p1;
  const double p = std::sqrt(p2 / 6);
  const double ba = (a - q) / p, bb = (b - q) / p, bc = (c - q) / p;
  const double bd = d / p, be = e / p, bf = f / p;
  const double det = ba * (bb * bc - bf * bf) - bd * (bd * bc - bf * be) + be * (bd * bf - bb * be);
  const double r = std::clamp(det / 2, -1.0, 1.0);
  const double phi = std::acos(r) / 3;
  const double l1 = q + 2 * p * std::cos(phi);
  const double l3 = q + 2 * p * std::cos(phi + 2 * std::numbers::pi / 3);
  const double l2 = 3 * q - l1 - l3;
  // acos is ill-conditioned at r = -1, where the top pair is degenerate (the
  // coherent state sits exactly there); only sqrt(eps) survives, so fall back.
  if (l1 - l2 < 1e-4 * p) return jacobi_eigenvalues(e_);
  return {l1, l2, l3};
}

DickeState coherent_state(int N, double theta, double phi) {
  if (N < 1) throw ParameterError("coherent_state: N must be >= 1");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw ParameterError("coherent_state: theta outside [0, pi]");
  DickeState s(N);
  const double lc = std::log(std::cos(theta / 2));
  const double ls = std::log(std::sin(theta / 2));
  const double lgN = std::lgamma(N + 1.0);
  for (int k = 0; k <= N; ++k) {
    // k = N/2 + mu quanta in the "up" mode; cos^k sin^(N-k) e^{i(N-k)phi}.
    double logmag = lgN - std::lgamma(k + 1.0) - std::lgamma(N - k + 1.0);
    logmag = 0.5 * logmag;
    if (k > 0) logmag += k * lc;
    if (N - k > 0) logmag += (N - k) * ls;
    const double mag = std::isfinite(logmag) ? std::exp(logmag) : 0.0;
    s.amp[k] = std::polar(mag, (N - k) * phi);
  }
  return s;
}

DickeState dicke_basis_state(int N, double mu) {
  DickeState s(N);
  const double idx = mu + 0.5 * N;
  const auto i = static_cast<long long>(std::llround(idx));
  if (std::abs(idx - static_cast<double>(i)) > 1e-12 || i < 0 || i > N)
    throw ParameterError("dicke_basis_state: mu not in {-N/2, ..., N/2}");
  s.amp[static_cast<std::size_t>(i)] = 1.0;
  return s;
}

double ladder_coefficient(int N, double mu) {
  const double j = 0.5 * N;
  return std::sqrt(std::max(0.0, j * (j + 1) - mu * (mu + 1)));
}

void apply_jz(const DickeState& in, std::span<cplx> out) {
  for (std::size_t i = 0; i < in.dim(); ++i) out[i] = in.mu(i) * in.amp[i];
}

void apply_jplus(const DickeState& in, std::span<cplx> out) {
  const std::size_t n = in.dim();
  out[0] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) out[i + 1] = ladder_coefficient(in.N, in.mu(i)) * in.amp[i];
}

void apply_jminus(const DickeState& in, std::span<cplx> out) {
  const std::size_t n = in.dim();
  out[n - 1] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = ladder_coefficient(in.N, in.mu(i)) * in.amp[i + 1];
}

SpinMoments spin_moments(const DickeState& state) {
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > 1e-8) throw ParameterError("spin_moments: state is not normalized");
  const std::size_t n = state.dim();
  std::vector<cplx> up(n), dn(n), jz(n);
  apply_jplus(state, up);
  apply_jminus(state, dn);
  apply_jz(state, jz);
  // J_x = (J+ + J-)/2, J_y = (J+ - J-)/(2i)
  std::vector<cplx> jx(n), jy(n);
  const cplx half_i(0.0, 0.5);
  for (std::size_t i = 0; i < n; ++i) {
    jx[i] = 0.5 * (up[i] + dn[i]);
    jy[i] = -half_i * (up[i] - dn[i]);
  }
  const std::array<const std::vector<cplx>*, 3> u{&jx, &jy, &jz};
  auto inner = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::conj(a[i]) * b[i];
    return s;
  };
  SpinMoments m;
  for (int k = 0; k < 3; ++k) m.first[k] = inner(state.amp, *u[k]).real();
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) m.second_sym[CovarianceMatrix::slot(k, l)] = inner(*u[k], *u[l]).real();
  return m;
}

CovarianceMatrix covariance_q(const SpinMoments& m) {
  std::array<double, 6> e{};
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) e[CovarianceMatrix::slot(k, l)] = 4 * (m.second(k, l) - m.first[k] * m.first[l]);
  return CovarianceMatrix(e);
}

double qfi(const CovarianceMatrix& cov) { return cov.max_eigenvalue(); }

double qfi(const DickeState& state) { return qfi(covariance_q(spin_moments(state))); }

EntanglementDepth entanglement_depth(double F, int N) {
  if (N < 1) throw ParameterError("entanglement_depth: N must be >= 1");
  const double n2 = static_cast<double>(N) * N;
  // Relative slack absorbs rounding in QFI values that sit exactly at N^2.
  if (!(F >= 0.0) || F > n2 * (1 + 1e-9)) throw DomainError("entanglement_depth: F outside [0, N^2]");
  auto bound = [N](int k) {
    const int s = N / k;
    const int r = N - s * k;
    return static_cast<double>(s) * k * k + static_cast<double>(r) * r;
  };
  // Ties do not witness; values within rounding of a bound count as ties.
  EntanglementDepth out{1, N, 0};
  for (int k = N - 1; k >= 1; --k) {
    if (F > bound(k) * (1 + 1e-12)) {
      out.k_plus_one = k + 1;
      out.s_floor = N / k;
      out.r_rem = N - out.s_floor * k;
      break;
    }
  }
  return out;
}

}  // namespace twomode
