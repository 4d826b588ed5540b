#pragma once

#include <span>
#include <vector>

#include "twomode/model.hpp"

namespace twomode {

// Second moments of the transverse fluctuation quadratures; qp is symmetrized.
struct HpMoments {
  double qq = 0.5;
  double pp = 0.5;
  double qp = 0.0;

  double uncertainty() const { return qq * pp - qp * qp; }
};

HpMoments hp_derivative(const HpMoments& m, double a_value, double c);
double n_exc(const HpMoments& m);
double f_hp(double n, int N);

struct HpSample {
  double t = 0.0;
  HpMoments m;
  double n_exc = 0.0;
  double F_HP = 0.0;
  bool valid = true;  // false once n_exc > N/10
};

HpMoments hp_advance(const HpMoments& m, const ModelParams& params, double t0, double t1, double dt);
std::vector<HpSample> integrate_hp(const HpMoments& init, const ModelParams& params, double t_end, double dt);
std::vector<HpSample> integrate_hp_on(const HpMoments& init, const ModelParams& params,
                                      std::span<const double> times, double dt);

}  // namespace twomode
