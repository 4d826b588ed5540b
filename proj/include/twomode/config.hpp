#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twomode/model.hpp"

namespace twomode {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& location, const std::string& what)
      : std::runtime_error(location + ": " + (key.empty() ? "" : "'" + key + "': ") + what),
        key_(key),
        location_(location) {}
  const std::string& key() const noexcept { return key_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string key_;
  std::string location_;
};

// Evenly spaced values from start to stop inclusive; written start:stop:count.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

const std::vector<std::string>& subcommands();

struct RunConfig {
  std::string subcommand;

  // model
  int N = 400;
  double c = 0.0;
  double A = 0.0;
  int sign = 1;
  std::string drive = "off";
  double tau0 = 1.0;
  double tau1 = 0.01;
  double v = 1e-3;

  // initial state and time grid
  double theta = 0.0;
  double phi = 0.0;
  double t_end = 0.0;
  double dt = 0.01;
  bool amplitudes = false;

  // grids and sweeps
  std::vector<int> N_list;
  Grid A_grid;
  Grid c_grid;
  int periods = 0;
  double delta0 = 1e-5;
  int seeds = 20;
  double spread_threshold = 1e-3;

  // break times
  double g = 0.01;
  std::string tier = "both";
  std::string regime = "stable";
  int N_min = 100;

  // phase transition
  double A_max = 0.0;
  int pole = 1;
  int sample_every = 100;

  // depth table
  std::string input;
  std::string column = "F_Q";

  std::string out = ".";
  int threads = 0;  // 0: OpenMP default

  std::set<std::string> explicit_keys;  // keys set by file or flags

  ModelParams model() const;
  // Canonical key=value dump of everything that influences results.
  std::string canonical() const;
  std::uint64_t hash() const;
};

using Override = std::pair<std::string, std::string>;

// Defaults for the subcommand, then the file (top level and the [common] and
// [<subcommand>] sections), then the overrides in order.
RunConfig parse_config(const std::string& subcommand, const std::optional<std::string>& path,
                       const std::vector<Override>& overrides = {});
RunConfig parse_config_text(const std::string& subcommand, const std::string& text, const std::string& origin,
                            const std::vector<Override>& overrides = {});

// Accepts plain reals and multiples of pi: "0.4pi", "pi", "-2*pi".
double parse_real(const std::string& text);

std::string hex64(std::uint64_t h);

}  // namespace twomode
