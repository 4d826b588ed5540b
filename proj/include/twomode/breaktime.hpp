#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twomode/model.hpp"
#include "twomode/parallel.hpp"

namespace twomode {

enum class Regime { stable, saddle, chaotic };
enum class Tier { bmf, hp, both };

std::string to_string(Regime r);
std::string to_string(Tier t);
Regime parse_regime(const std::string& s);
Tier parse_tier(const std::string& s);

// `crossed == false` marks a series that never left the tolerance band; t is
// then the last sample time.
struct BreakTime {
  double t = 0.0;
  bool crossed = false;
};

// First time |F_exact - F_approx| / F_exact >= g, linearly interpolated.
BreakTime t_break(std::span<const double> times, std::span<const double> exact, std::span<const double> approx,
                  double g);

struct BreakTimeOptions {
  double dt = 0.01;
  double t_end = 50.0;
};

struct BreakTimeRecord {
  int N = 0;
  double A = 0.0;
  double c = 0.0;
  Regime regime = Regime::stable;
  double g = 0.01;
  BreakTime ib;  // BMF tier
  BreakTime hp;  // HP tier
  bool has_ib = false;
  bool has_hp = false;
};

// Exact, BMF and HP run in lockstep on one grid from the x-polarized coherent
// state, stopping once every requested tier has crossed.
BreakTimeRecord breaktime_point(const ModelParams& params, Regime regime, double g, Tier tier,
                                const BreakTimeOptions& opts = {}, Execution inner = Execution::serial);

std::vector<BreakTimeRecord> breaktime_scan(std::span<const int> N_list, const ModelParams& base, Regime regime,
                                            double g, Tier tier, const BreakTimeOptions& opts = {},
                                            Execution exec = Execution::parallel);

enum class ScalingModel { sqrtN, logN, log4N };
std::string to_string(ScalingModel m);
double scaling_basis(ScalingModel m, int N);

struct ScalingFit {
  ScalingModel model = ScalingModel::sqrtN;
  double alpha = 0.0;
  double residual = 0.0;
  int N_lo = 0;
  int N_hi = 0;
  int points = 0;
};

// Least-squares t = alpha f(N) over crossed records with N >= N_min.
// `tier` picks t_IB (bmf) or t_HP (hp).
ScalingFit scaling_fit(std::span<const BreakTimeRecord> records, ScalingModel model, Tier tier = Tier::bmf,
                       int N_min = 100);
// All three models, best (smallest residual) first.
std::vector<ScalingFit> rank_models(std::span<const BreakTimeRecord> records, Tier tier = Tier::bmf,
                                    int N_min = 100);

struct PrefactorFit {
  double eta = 0.0;
  double gamma = 0.0;
  double correlation = 0.0;  // Pearson r of ln(alpha) against lambda
  double residual = 0.0;     // in ln(alpha)
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  int points = 0;
};

// ln(alpha) = ln(eta) - gamma lambda by linear least squares.
PrefactorFit prefactor_lyapunov_fit(std::span<const std::pair<double, double>> points);

}  // namespace twomode
