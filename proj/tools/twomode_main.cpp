#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twomode/config.hpp"
#include "twomode/parallel.hpp"
#include "twomode/run.hpp"

namespace {

struct Flags {
  std::optional<std::string> config;
  std::vector<std::string> set;
  std::vector<std::pair<std::string, std::string>> values;  // flag name, raw text
};

void add_common(CLI::App& sub, Flags& f, std::map<std::string, std::string>& raw) {
  sub.add_option("--config", f.config, "key=value config file");
  sub.add_option("--set", f.set, "extra key=value override (repeatable)");
  static const std::vector<std::pair<std::string, std::string>> keys = {
      {"out", "output directory"},
      {"threads", "OpenMP threads (TWOMODE_THREADS overrides)"},
      {"dt", "time step"},
      {"g", "break-time threshold"},
      {"N", "particle number"},
      {"A", "drive strength (accepts e.g. 0.4pi)"},
      {"c", "interaction strength (accepts e.g. 0.8pi)"},
      {"periods", "kick periods"},
      {"tier", "bmf | hp | both (qpt: exact | bmf | both)"},
      {"t-end", "final time"},
      {"v", "ramp rate"},
      {"regime", "stable | saddle | chaotic"},
      {"N-list", "comma-separated particle numbers"},
      {"A-grid", "start:stop:count"},
      {"c-grid", "start:stop:count"},
      {"input", "QFI series CSV for depth"},
  };
  for (const auto& [name, help] : keys) sub.add_option("--" + name, raw[name], help);
}

std::string key_for(const std::string& flag) {
  std::string k = flag;
  for (char& ch : k)
    if (ch == '-') ch = '_';
  return k;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode boson dynamics: exact, BMF, HP and mean-field tiers"};
  app.require_subcommand(1);
  Flags flags;
  std::map<std::string, std::map<std::string, std::string>> raw;
  const std::map<std::string, std::string> about{
      {"oat", "one-axis twisting: QFI from the exact, BMF and HP tiers"},
      {"tat", "twist-and-turn with a constant field"},
      {"qkr", "kicked top, stroboscopic QFI over whole periods"},
      {"lyap-map", "mean-field Lyapunov exponent over an (A, c) grid"},
      {"poincare", "stroboscopic section and bounded-seed fraction"},
      {"breaktime-scan", "BMF/HP break times over N plus scaling fits"},
      {"qpt", "adiabatic field ramp across the transition"},
      {"depth", "entanglement depth table from a QFI CSV"},
  };
  for (const std::string& name : twomode::subcommands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    add_common(*sub, flags, raw[name]);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : twomode::exit_config;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  CLI::App* sub = app.get_subcommand(name);

  std::vector<twomode::Override> overrides;
  for (const auto& [flag, value] : raw[name])
    if (sub->count("--" + flag) > 0) overrides.emplace_back(key_for(flag), value);
  for (const std::string& kv : flags.set) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "config error: --set expects key=value, got '" << kv << "'\n";
      return twomode::exit_config;
    }
    overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }

  twomode::RunConfig cfg;
  try {
    cfg = twomode::parse_config(name, flags.config, overrides);
  } catch (const twomode::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return twomode::exit_config;
  }

  int threads = cfg.threads;
  if (const char* env = std::getenv("TWOMODE_THREADS")) threads = std::atoi(env);
  twomode::set_threads(threads);

  const int rc = twomode::run(cfg, std::cerr);
  if (rc == twomode::exit_ok) std::cout << "wrote " << cfg.out << "/manifest.txt (config " << twomode::hex64(cfg.hash()) << ")\n";
  return rc;
}
