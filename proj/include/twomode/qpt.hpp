#pragma once

#include <vector>

namespace twomode {

enum class SweepTier { exact, bmf, both };

struct SweepOptions {
  int N = 200;
  double c = 1.0;
  double v = 1e-3;
  double A_max = 2.0;
  double dt = 5e-3;
  SweepTier tier = SweepTier::both;
  int pole = +1;          // start in |mu = pole * N/2>
  int sample_every = 100;  // steps between recorded samples
};

// Fields of a tier that was not run are NaN.
struct SweepSample {
  double t = 0.0;
  double A = 0.0;
  double sz_exact = 0.0;
  double sz_bmf = 0.0;
  double F_Q = 0.0;
  double F_B = 0.0;
};

struct CriticalPoint {
  double A = 0.0;
  bool at_edge = false;
};

struct SweepResult {
  std::vector<SweepSample> samples;
  CriticalPoint star_Q;
  CriticalPoint star_B;
};

// H = A(t) J_x - (c/N) J_z^2 with A = v t, from a Fock pole up to A_max.
SweepResult adiabatic_sweep(const SweepOptions& opts);

// Maximum of F_Q (tier exact) or F_B (tier bmf), refined by the parabola
// through the discrete argmax and its neighbours.
CriticalPoint pseudo_critical_point(const SweepResult& result, SweepTier tier);
CriticalPoint parabolic_peak(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace twomode
