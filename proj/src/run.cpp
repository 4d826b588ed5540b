#include "twomode/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "twomode/errors.hpp"
#include "twomode/io.hpp"
#include "twomode/spin.hpp"

namespace twomode {

namespace {

namespace fs = std::filesystem;

class Artifacts {
 public:
  Artifacts(const RunConfig& cfg) : dir_(cfg.out), hash_(hex64(cfg.hash())), subcommand_(cfg.subcommand) {
    fs::create_directories(dir_);
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    std::ostringstream buf;
    body(buf);
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    out << buf.str();
    files_.push_back(name);
  }

  void manifest(const std::string& status) const {
    std::ofstream out(dir_ / "manifest.txt", std::ios::binary);
    out << "subcommand=" << subcommand_ << '\n' << "config_hash=" << hash_ << '\n';
    for (const std::string& f : files_) out << "file=" << f << " config_hash=" << hash_ << '\n';
    out << "status=" << status << '\n';
  }

 private:
  fs::path dir_;
  std::string hash_;
  std::string subcommand_;
  std::vector<std::string> files_;
};

void run_trajectory(const RunConfig& cfg, Artifacts& art) {
  const ModelParams p = cfg.model();
  p.validate();
  const std::vector<double> grid = make_time_grid(p.drive, cfg.t_end, cfg.dt);
  const auto exact = qfi_trajectory(p, coherent_state(p.N, cfg.theta, cfg.phi), grid, cfg.amplitudes, cfg.dt);
  art.write("exact_trajectory.csv", [&](std::ostream& os) { io::write_exact_trajectory(os, exact, cfg.amplitudes); });
  const auto bmf = integrate_bmf_on(bmf_initial(p.N, cfg.theta, cfg.phi), p, grid, cfg.dt);
  art.write("bmf_trajectory.csv", [&](std::ostream& os) { io::write_bmf_trajectory(os, bmf, p.N); });
  const auto hp = integrate_hp_on(HpMoments{}, p, grid, cfg.dt);
  art.write("hp_trajectory.csv", [&](std::ostream& os) { io::write_hp_trajectory(os, hp); });
  art.write(cfg.subcommand + "_qfi.csv", [&](std::ostream& os) { io::write_qfi_comparison(os, exact, bmf, hp, p.N); });
}

void run_lyap_map(const RunConfig& cfg, Artifacts& art) {
  const std::vector<double> A = cfg.A_grid.values(), c = cfg.c_grid.values();
  const BlochVector s0{std::sin(cfg.theta) * std::cos(cfg.phi), std::sin(cfg.theta) * std::sin(cfg.phi),
                       std::cos(cfg.theta)};
  const LyapunovMap map = lyapunov_map(A, c, s0, cfg.periods, cfg.delta0, cfg.tau0, cfg.tau1);
  art.write("lyapunov_map.csv", [&](std::ostream& os) { io::write_lyapunov_map(os, map); });
}

void run_poincare(const RunConfig& cfg, Artifacts& art) {
  const ModelParams p = cfg.model();
  const std::vector<BlochVector> seeds = default_seed_grid(cfg.seeds);
  const auto points = poincare_section(p, seeds, cfg.periods);
  art.write("poincare.csv", [&](std::ostream& os) { io::write_poincare(os, points); });
  const double frac = regular_fraction(p, seeds, cfg.periods, 1e-8, cfg.spread_threshold);
  art.write("poincare_summary.txt", [&](std::ostream& os) {
    os << "seeds=" << seeds.size() << '\n'
       << "periods=" << cfg.periods << '\n'
       << "spread_threshold=" << io::format_real(cfg.spread_threshold) << '\n'
       << "regular_fraction=" << io::format_real(frac) << '\n';
  });
}

void write_fit_block(std::ostream& os, const std::vector<BreakTimeRecord>& recs, Tier tier, int N_min) {
  const std::string prefix = to_string(tier) + ".";
  try {
    const auto fits = rank_models(recs, tier, N_min);
    for (const ScalingFit& f : fits) {
      const std::string k = prefix + to_string(f.model) + ".";
      os << k << "alpha=" << io::format_real(f.alpha) << '\n'
         << k << "inverse_alpha=" << io::format_real(1 / f.alpha) << '\n'
         << k << "residual=" << io::format_real(f.residual) << '\n';
    }
    os << prefix << "best_model=" << to_string(fits.front().model) << '\n'
       << prefix << "N_range=" << fits.front().N_lo << ".." << fits.front().N_hi << '\n'
       << prefix << "points=" << fits.front().points << '\n';
  } catch (const ParameterError& e) {
    os << prefix << "fit=unavailable (" << e.what() << ")\n";
  }
}

void run_breaktime(const RunConfig& cfg, Artifacts& art) {
  const ModelParams base = cfg.model();
  const Tier tier = parse_tier(cfg.tier);
  const auto recs = breaktime_scan(cfg.N_list, base, parse_regime(cfg.regime), cfg.g, tier, {cfg.dt, cfg.t_end});
  art.write("breaktime.csv", [&](std::ostream& os) { io::write_breaktime_records(os, recs); });
  art.write("breaktime_fit.txt", [&](std::ostream& os) {
    os << "regime=" << cfg.regime << '\n' << "g=" << io::format_real(cfg.g) << '\n' << "N_min=" << cfg.N_min << '\n';
    if (tier != Tier::hp) write_fit_block(os, recs, Tier::bmf, cfg.N_min);
    if (tier != Tier::bmf) write_fit_block(os, recs, Tier::hp, cfg.N_min);
  });
}

void run_qpt(const RunConfig& cfg, Artifacts& art) {
  SweepOptions o;
  o.N = cfg.N;
  o.c = cfg.c;
  o.v = cfg.v;
  o.A_max = cfg.A_max;
  o.dt = cfg.dt;
  o.tier = cfg.tier == "exact" ? SweepTier::exact : cfg.tier == "bmf" ? SweepTier::bmf : SweepTier::both;
  o.pole = cfg.pole;
  o.sample_every = cfg.sample_every;
  const SweepResult res = adiabatic_sweep(o);
  art.write("qpt_sweep.csv", [&](std::ostream& os) { io::write_sweep(os, res); });
  art.write("qpt_summary.txt", [&](std::ostream& os) {
    if (o.tier != SweepTier::bmf)
      os << "A_star_Q=" << io::format_real(res.star_Q.A) << '\n' << "A_star_Q_at_edge=" << res.star_Q.at_edge << '\n';
    if (o.tier != SweepTier::exact)
      os << "A_star_B=" << io::format_real(res.star_B.A) << '\n' << "A_star_B_at_edge=" << res.star_B.at_edge << '\n';
  });
}

void run_depth(const RunConfig& cfg, Artifacts& art) {
  const std::vector<double> t = io::read_csv_column(cfg.input, "t");
  const std::vector<double> F = io::read_csv_column(cfg.input, cfg.column);
  art.write("depth.csv", [&](std::ostream& os) {
    io::CsvWriter w(os, {"t", "F", "depth", "s_floor", "r_rem"});
    for (std::size_t i = 0; i < F.size(); ++i) {
      const EntanglementDepth d = entanglement_depth(F[i], cfg.N);
      w.row({io::format_real(t[i]), io::format_real(F[i]), std::to_string(d.k_plus_one), std::to_string(d.s_floor),
             std::to_string(d.r_rem)});
    }
  });
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& log) {
  std::optional<Artifacts> art;
  try {
    art.emplace(cfg);
  } catch (const std::exception& e) {
    log << "error: output directory '" << cfg.out << "': " << e.what() << '\n';
    return exit_config;
  }
  try {
    const std::string& s = cfg.subcommand;
    if (s == "oat" || s == "tat" || s == "qkr") run_trajectory(cfg, *art);
    else if (s == "lyap-map") run_lyap_map(cfg, *art);
    else if (s == "poincare") run_poincare(cfg, *art);
    else if (s == "breaktime-scan") run_breaktime(cfg, *art);
    else if (s == "qpt") run_qpt(cfg, *art);
    else if (s == "depth") run_depth(cfg, *art);
    art->manifest("OK");
    return exit_ok;
  } catch (const SolverError& e) {
    art->manifest(std::string("FAILED ") + e.what());
    log << "solver error: " << e.what() << '\n';
    return exit_solver;
  } catch (const ParameterError& e) {
    art->manifest(std::string("FAILED ") + e.what());
    log << "parameter error: " << e.what() << '\n';
    return exit_config;
  } catch (const DomainError& e) {
    art->manifest(std::string("FAILED ") + e.what());
    log << "domain error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    art->manifest(std::string("FAILED ") + e.what());
    log << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace twomode
