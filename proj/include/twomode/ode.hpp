#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "twomode/model.hpp"

namespace twomode {

template <std::size_t K>
using OdeVec = std::array<double, K>;

template <std::size_t K>
OdeVec<K> axpy(const OdeVec<K>& y, double h, const OdeVec<K>& k) {
  OdeVec<K> out;
  for (std::size_t i = 0; i < K; ++i) out[i] = y[i] + h * k[i];
  return out;
}

// Classical RK4 step for dy/dt = f(y, a(t)).
template <std::size_t K, class F, class A>
OdeVec<K> rk4_step(const OdeVec<K>& y, double t, double h, F&& f, A&& a_of_t) {
  const OdeVec<K> k1 = f(y, a_of_t(t));
  const OdeVec<K> k2 = f(axpy(y, h / 2, k1), a_of_t(t + h / 2));
  const OdeVec<K> k3 = f(axpy(y, h / 2, k2), a_of_t(t + h / 2));
  const OdeVec<K> k4 = f(axpy(y, h, k3), a_of_t(t + h));
  OdeVec<K> out;
  for (std::size_t i = 0; i < K; ++i)
    out[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Advances y from t0 to t1 across drive segments. f(y, a) is the autonomous
// right-hand side at field value a. `guard(y, t)` runs after every step.
template <std::size_t K, class F, class G>
OdeVec<K> advance_driven(OdeVec<K> y, const DriveProtocol& drive, double t0, double t1,
                         const StepPolicy& policy, F&& f, G&& guard) {
  for (const DriveSegment& seg : drive_segments(drive, t0, t1)) {
    const int n = substeps(seg, drive, policy);
    const double h = seg.length() / n;
    for (int s = 0; s < n; ++s) {
      const double t = seg.t0 + s * h;
      if (seg.ramp) {
        y = rk4_step(y, t, h, f, [&](double tt) { return drive.v * tt; });
      } else {
        const double a = seg.a;
        y = rk4_step(y, t, h, f, [a](double) { return a; });
      }
      guard(y, t + h);
    }
  }
  return y;
}

}  // namespace twomode
