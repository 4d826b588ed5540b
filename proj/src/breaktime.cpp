#include "twomode/breaktime.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twomode/bmf.hpp"
#include "twomode/errors.hpp"
#include "twomode/exact.hpp"
#include "twomode/hp.hpp"
#include "twomode/spin.hpp"

namespace twomode {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::stable: return "stable";
    case Regime::saddle: return "saddle";
    case Regime::chaotic: return "chaotic";
  }
  return "?";
}

std::string to_string(Tier t) {
  switch (t) {
    case Tier::bmf: return "bmf";
    case Tier::hp: return "hp";
    case Tier::both: return "both";
  }
  return "?";
}

Regime parse_regime(const std::string& s) {
  if (s == "stable") return Regime::stable;
  if (s == "saddle") return Regime::saddle;
  if (s == "chaotic" || s == "chaos") return Regime::chaotic;
  throw ParameterError("unknown regime '" + s + "'");
}

Tier parse_tier(const std::string& s) {
  if (s == "bmf") return Tier::bmf;
  if (s == "hp") return Tier::hp;
  if (s == "both") return Tier::both;
  throw ParameterError("unknown tier '" + s + "'");
}

std::string to_string(ScalingModel m) {
  switch (m) {
    case ScalingModel::sqrtN: return "sqrtN";
    case ScalingModel::logN: return "logN";
    case ScalingModel::log4N: return "log4N";
  }
  return "?";
}

double scaling_basis(ScalingModel m, int N) {
  const double n = N;
  switch (m) {
    case ScalingModel::sqrtN: return std::sqrt(n);
    case ScalingModel::logN: return std::log(n);
    case ScalingModel::log4N: return std::pow(std::log(n), 4);
  }
  return 0.0;
}

BreakTime t_break(std::span<const double> times, std::span<const double> exact, std::span<const double> approx,
                  double g) {
  if (times.size() != exact.size() || times.size() != approx.size())
    throw DimensionError("t_break: series lengths differ");
  if (times.empty()) throw ParameterError("t_break: empty series");
  if (!(g > 0.0)) throw ParameterError("t_break: g must be positive");
  double prev = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double r = std::abs(exact[k] - approx[k]) / exact[k];
    if (r >= g) {
      if (k == 0) return {times[0], true};
      const double w = (g - prev) / (r - prev);
      return {times[k - 1] + w * (times[k] - times[k - 1]), true};
    }
    prev = r;
  }
  return {times.back(), false};
}

namespace {

bool crossed_now(double exact, double approx, double g) { return std::abs(exact - approx) / exact >= g; }

[[noreturn]] void rethrow_tagged(const SolverError& e, int N) {
  const std::string msg = "N=" + std::to_string(N) + ": " + e.what();
  if (dynamic_cast<const DivergenceError*>(&e)) throw DivergenceError(msg, e.time());
  if (dynamic_cast<const StepSizeError*>(&e)) throw StepSizeError(msg, e.time());
  throw IntegratorError(msg, e.time());
}

}  // namespace

BreakTimeRecord breaktime_point(const ModelParams& params, Regime regime, double g, Tier tier,
                                const BreakTimeOptions& opts, Execution inner) {
  params.validate();
  if (!(g > 0.0 && g < 1.0)) throw ParameterError("breaktime: g must lie in (0, 1)");
  const bool want_ib = tier != Tier::hp;
  const bool want_hp = tier != Tier::bmf;
  const std::vector<double> grid = make_time_grid(params.drive, opts.t_end, opts.dt);

  BreakTimeRecord rec;
  rec.N = params.N;
  rec.A = params.drive.kind == DriveKind::ramp ? 0.0 : params.drive.A;
  rec.c = params.c;
  rec.regime = regime;
  rec.g = g;
  rec.has_ib = want_ib;
  rec.has_hp = want_hp;

  try {
    const ExactEvolver evolver(params, opts.dt, inner);
    DickeState psi = coherent_state(params.N, std::numbers::pi / 2, 0.0);
    BmfState bmf = bmf_initial(params.N, std::numbers::pi / 2, 0.0);
    HpMoments hp;
    std::vector<double> ts, fq, fb, fh;
    bool done_ib = !want_ib, done_hp = !want_hp;
    double t = 0.0;
    for (const double tn : grid) {
      evolver.advance(psi, t, tn);
      if (want_ib) bmf = bmf_advance(bmf, params, t, tn, opts.dt);
      if (want_hp) hp = hp_advance(hp, params, t, tn, opts.dt);
      t = tn;
      const double F = qfi(psi);
      ts.push_back(tn);
      fq.push_back(F);
      if (want_ib) {
        fb.push_back(f_b(bmf, params.N));
        done_ib = done_ib || crossed_now(F, fb.back(), g);
      }
      if (want_hp) {
        fh.push_back(f_hp(n_exc(hp), params.N));
        done_hp = done_hp || crossed_now(F, fh.back(), g);
      }
      if (done_ib && done_hp) break;
    }
    if (want_ib) rec.ib = t_break(ts, fq, fb, g);
    if (want_hp) rec.hp = t_break(ts, fq, fh, g);
  } catch (const SolverError& e) {
    rethrow_tagged(e, params.N);
  }
  return rec;
}

std::vector<BreakTimeRecord> breaktime_scan(std::span<const int> N_list, const ModelParams& base, Regime regime,
                                            double g, Tier tier, const BreakTimeOptions& opts, Execution exec) {
  if (N_list.empty()) throw ParameterError("breaktime_scan: empty N list");
  std::vector<BreakTimeRecord> out(N_list.size());
  for_each_index(exec, N_list.size(), [&](std::size_t k) {
    ModelParams p = base;
    p.N = N_list[k];
    out[k] = breaktime_point(p, regime, g, tier, opts, Execution::serial);
  });
  return out;
}

ScalingFit scaling_fit(std::span<const BreakTimeRecord> records, ScalingModel model, Tier tier, int N_min) {
  if (tier == Tier::both) throw ParameterError("scaling_fit: choose the bmf or hp break time");
  std::vector<std::pair<int, double>> pts;
  for (const BreakTimeRecord& r : records) {
    const BreakTime& bt = tier == Tier::bmf ? r.ib : r.hp;
    const bool has = tier == Tier::bmf ? r.has_ib : r.has_hp;
    if (has && bt.crossed && r.N >= N_min) pts.emplace_back(r.N, bt.t);
  }
  if (pts.size() < 3) throw ParameterError("scaling_fit: need at least 3 crossed records");
  std::sort(pts.begin(), pts.end());
  if (pts.front().first == pts.back().first) throw ParameterError("scaling_fit: degenerate N range");
  double sff = 0.0, stf = 0.0;
  for (const auto& [N, t] : pts) {
    const double f = scaling_basis(model, N);
    sff += f * f;
    stf += t * f;
  }
  ScalingFit fit;
  fit.model = model;
  fit.alpha = stf / sff;
  double rss = 0.0;
  for (const auto& [N, t] : pts) {
    const double e = t - fit.alpha * scaling_basis(model, N);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss);
  fit.N_lo = pts.front().first;
  fit.N_hi = pts.back().first;
  fit.points = static_cast<int>(pts.size());
  return fit;
}

std::vector<ScalingFit> rank_models(std::span<const BreakTimeRecord> records, Tier tier, int N_min) {
  std::vector<ScalingFit> fits;
  for (ScalingModel m : {ScalingModel::sqrtN, ScalingModel::logN, ScalingModel::log4N})
    fits.push_back(scaling_fit(records, m, tier, N_min));
  std::stable_sort(fits.begin(), fits.end(),
                   [](const ScalingFit& a, const ScalingFit& b) { return a.residual < b.residual; });
  return fits;
}

PrefactorFit prefactor_lyapunov_fit(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw ParameterError("prefactor_lyapunov_fit: need at least 3 points");
  std::vector<std::pair<double, double>> pts(points.begin(), points.end());
  for (const auto& [lam, alpha] : pts) {
    if (!(alpha > 0.0)) throw DomainError("prefactor_lyapunov_fit: prefactor must be positive");
    if (!(lam > 0.0)) throw DomainError("prefactor_lyapunov_fit: Lyapunov exponent must be positive");
  }
  std::sort(pts.begin(), pts.end());
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, a] : pts) {
    mx += x;
    my += std::log(a);
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, a] : pts) {
    const double dx = x - mx, dy = std::log(a) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw ParameterError("prefactor_lyapunov_fit: degenerate lambda range");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  PrefactorFit fit;
  fit.eta = std::exp(intercept);
  fit.gamma = -slope;
  fit.correlation = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : -1.0;
  double rss = 0.0;
  for (const auto& [x, a] : pts) {
    const double e = std::log(a) - (intercept + slope * x);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss);
  fit.lambda_lo = pts.front().first;
  fit.lambda_hi = pts.back().first;
  fit.points = static_cast<int>(pts.size());
  return fit;
}

}  // namespace twomode
