#include "twomode/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "twomode/io.hpp"

namespace twomode {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  const long long v = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  if (v < -2147483647LL || v > 2147483647LL) throw std::out_of_range("integer out of range");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw std::invalid_argument("expected a boolean");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item)));
  return out;
}

Grid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() == 1) return {parse_real(parts[0]), parse_real(parts[0]), 1};
  if (parts.size() != 3) throw std::invalid_argument("expected start:stop:count");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_int(parts[2])};
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& registry() {
  static const std::map<std::string, Setter> keys = {
      {"N", [](RunConfig& c, const std::string& v) { c.N = parse_int(v); }},
      {"c", [](RunConfig& c, const std::string& v) { c.c = parse_real(v); }},
      {"A", [](RunConfig& c, const std::string& v) { c.A = parse_real(v); }},
      {"sign", [](RunConfig& c, const std::string& v) { c.sign = parse_int(v); }},
      {"drive", [](RunConfig& c, const std::string& v) { c.drive = v; }},
      {"tau0", [](RunConfig& c, const std::string& v) { c.tau0 = parse_real(v); }},
      {"tau1", [](RunConfig& c, const std::string& v) { c.tau1 = parse_real(v); }},
      {"v", [](RunConfig& c, const std::string& v) { c.v = parse_real(v); }},
      {"theta", [](RunConfig& c, const std::string& v) { c.theta = parse_real(v); }},
      {"phi", [](RunConfig& c, const std::string& v) { c.phi = parse_real(v); }},
      {"t_end", [](RunConfig& c, const std::string& v) { c.t_end = parse_real(v); }},
      {"dt", [](RunConfig& c, const std::string& v) { c.dt = parse_real(v); }},
      {"amplitudes", [](RunConfig& c, const std::string& v) { c.amplitudes = parse_bool(v); }},
      {"N_list", [](RunConfig& c, const std::string& v) { c.N_list = parse_int_list(v); }},
      {"A_grid", [](RunConfig& c, const std::string& v) { c.A_grid = parse_grid(v); }},
      {"c_grid", [](RunConfig& c, const std::string& v) { c.c_grid = parse_grid(v); }},
      {"periods", [](RunConfig& c, const std::string& v) { c.periods = parse_int(v); }},
      {"delta0", [](RunConfig& c, const std::string& v) { c.delta0 = parse_real(v); }},
      {"seeds", [](RunConfig& c, const std::string& v) { c.seeds = parse_int(v); }},
      {"spread_threshold", [](RunConfig& c, const std::string& v) { c.spread_threshold = parse_real(v); }},
      {"g", [](RunConfig& c, const std::string& v) { c.g = parse_real(v); }},
      {"tier", [](RunConfig& c, const std::string& v) { c.tier = v; }},
      {"regime", [](RunConfig& c, const std::string& v) { c.regime = v; }},
      {"N_min", [](RunConfig& c, const std::string& v) { c.N_min = parse_int(v); }},
      {"A_max", [](RunConfig& c, const std::string& v) { c.A_max = parse_real(v); }},
      {"pole", [](RunConfig& c, const std::string& v) { c.pole = parse_int(v); }},
      {"sample_every", [](RunConfig& c, const std::string& v) { c.sample_every = parse_int(v); }},
      {"input", [](RunConfig& c, const std::string& v) { c.input = v; }},
      {"column", [](RunConfig& c, const std::string& v) { c.column = v; }},
      {"out", [](RunConfig& c, const std::string& v) { c.out = v; }},
      {"threads", [](RunConfig& c, const std::string& v) { c.threads = parse_int(v); }},
  };
  return keys;
}

void apply_defaults(RunConfig& c) {
  const double pi = std::numbers::pi;
  c.theta = pi / 2;
  const std::string& s = c.subcommand;
  if (s == "oat") {
    c.N = 400, c.c = pi, c.drive = "off", c.t_end = 20.0;
  } else if (s == "tat") {
    c.N = 400, c.c = pi, c.A = pi / 2, c.drive = "constant", c.t_end = 5.0;
  } else if (s == "qkr") {
    c.N = 200, c.c = 0.8 * pi, c.A = 0.4 * pi, c.drive = "kicked", c.periods = 10;
  } else if (s == "lyap-map") {
    c.drive = "kicked", c.periods = 500;
    c.A_grid = {0.0, pi, 21};
    c.c_grid = {0.0, 2 * pi, 41};
  } else if (s == "poincare") {
    c.c = 0.8 * pi, c.A = 0.4 * pi, c.drive = "kicked", c.periods = 200;
  } else if (s == "breaktime-scan") {
    c.c = 0.2 * pi, c.A = 0.4 * pi, c.drive = "kicked", c.t_end = 50.0;
    c.N_list = {64, 100, 144, 196, 256, 324, 400};
  } else if (s == "qpt") {
    c.N = 200, c.c = 1.0, c.drive = "ramp", c.sign = -1, c.dt = 5e-3;
  }
}

struct Source {
  std::string key;
  std::string value;
  std::string location;
};

void apply(RunConfig& cfg, std::map<std::string, std::string>& where, const Source& src) {
  const auto& keys = registry();
  const auto it = keys.find(src.key);
  if (it == keys.end()) throw ConfigError(src.key, src.location, "unknown key");
  try {
    it->second(cfg, src.value);
  } catch (const std::exception& e) {
    throw ConfigError(src.key, src.location, "cannot parse '" + src.value + "' (" + e.what() + ")");
  }
  cfg.explicit_keys.insert(src.key);
  where[src.key] = src.location;
}

std::vector<Source> read_sources(const std::string& subcommand, const std::string& text, const std::string& origin) {
  std::vector<Source> out;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  const auto& subs = subcommands();
  while (std::getline(in, line)) {
    ++lineno;
    const std::string loc = origin + ":" + std::to_string(lineno);
    const auto hash = line.find_first_of("#;");
    line = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("", loc, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "common" && std::find(subs.begin(), subs.end(), section) == subs.end())
        throw ConfigError("", loc, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("", loc, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!registry().contains(key)) throw ConfigError(key, loc, "unknown key");
    if (section.empty() || section == "common" || section == subcommand) out.push_back({key, value, loc});
  }
  return out;
}

void validate(const RunConfig& c, const std::map<std::string, std::string>& where) {
  auto fail = [&](const std::string& key, const std::string& what) {
    const auto it = where.find(key);
    throw ConfigError(key, it == where.end() ? "default for " + c.subcommand : it->second, what);
  };
  const std::string& s = c.subcommand;
  if (c.N < 1) fail("N", "must be >= 1");
  if (!(c.dt > 0.0)) fail("dt", "must be positive");
  if (!(c.t_end >= 0.0)) fail("t_end", "must be nonnegative");
  if (!(c.g > 0.0 && c.g < 1.0)) fail("g", "must lie in (0, 1)");
  if (c.sign != 1 && c.sign != -1) fail("sign", "must be +1 or -1");
  if (c.pole != 1 && c.pole != -1) fail("pole", "must be +1 or -1");
  if (!(c.theta >= 0.0 && c.theta <= std::numbers::pi)) fail("theta", "must lie in [0, pi]");
  if (!std::isfinite(c.c)) fail("c", "must be finite");
  if (!std::isfinite(c.A)) fail("A", "must be finite");
  if (c.drive != "off" && c.drive != "constant" && c.drive != "kicked" && c.drive != "ramp")
    fail("drive", "must be one of off, constant, kicked, ramp");
  if (c.drive != "kicked") {
    for (const char* k : {"tau0", "tau1"})
      if (c.explicit_keys.contains(k)) fail(k, "kick fields conflict with drive=" + c.drive);
  } else {
    if (!(c.tau0 > 0.0)) fail("tau0", "must be positive");
    if (!(c.tau1 > 0.0)) fail("tau1", "must be positive");
  }
  if (c.drive == "ramp") {
    if (!(c.v > 0.0)) fail("v", "must be positive");
  } else if (c.explicit_keys.contains("v")) {
    fail("v", "ramp rate conflicts with drive=" + c.drive);
  }
  if (s == "qpt" && c.drive != "ramp") fail("drive", "qpt sweeps need drive=ramp");
  if ((s == "qkr" || s == "lyap-map" || s == "poincare") && c.drive != "kicked")
    fail("drive", s + " needs drive=kicked");
  if ((s == "oat" && c.drive != "off") || (s == "tat" && c.drive != "constant"))
    fail("drive", "conflicts with subcommand " + s);
  if ((s == "qkr" || s == "lyap-map" || s == "poincare") && c.periods < 1) fail("periods", "must be >= 1");
  if (s == "qpt") {
    if (c.tier != "exact" && c.tier != "bmf" && c.tier != "both") fail("tier", "must be exact, bmf or both");
    if (!(c.A_max > 0.0)) fail("A_max", "must be positive");
    if (c.sample_every < 1) fail("sample_every", "must be >= 1");
  } else if (c.tier != "bmf" && c.tier != "hp" && c.tier != "both") {
    fail("tier", "must be bmf, hp or both");
  }
  if (c.regime != "stable" && c.regime != "saddle" && c.regime != "chaotic")
    fail("regime", "must be stable, saddle or chaotic");
  if (s == "breaktime-scan") {
    if (c.N_list.empty()) fail("N_list", "must not be empty");
    for (int n : c.N_list)
      if (n < 1) fail("N_list", "entries must be >= 1");
  }
  if (s == "lyap-map") {
    if (c.A_grid.count < 1) fail("A_grid", "needs at least one point");
    if (c.c_grid.count < 1) fail("c_grid", "needs at least one point");
  }
  if (!(c.delta0 > 0.0)) fail("delta0", "must be positive");
  if (c.seeds < 1) fail("seeds", "must be >= 1");
  if (!(c.spread_threshold > 0.0)) fail("spread_threshold", "must be positive");
  if (s == "depth" && c.input.empty()) fail("input", "depth needs an input CSV");
  if (c.threads < 0) fail("threads", "must be >= 0");
  if (c.out.empty()) fail("out", "must not be empty");
}

}  // namespace

std::vector<double> Grid::values() const {
  std::vector<double> out;
  if (count == 1) return {start};
  for (int k = 0; k < count; ++k) out.push_back(start + (stop - start) * k / (count - 1));
  return out;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s{"oat", "tat", "qkr", "lyap-map", "poincare", "breaktime-scan", "qpt", "depth"};
  return s;
}

double parse_real(const std::string& raw) {
  std::string text = trim(raw);
  double scale = 1.0;
  if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
    scale = std::numbers::pi;
    text = trim(text.substr(0, text.size() - 2));
    if (!text.empty() && text.back() == '*') text = trim(text.substr(0, text.size() - 1));
    if (text.empty() || text == "+") return scale;
    if (text == "-") return -scale;
  }
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("not a number");
  return v * scale;
}

ModelParams RunConfig::model() const {
  ModelParams p;
  p.N = N;
  p.c = c;
  p.interaction_sign = sign;
  if (drive == "constant") p.drive = DriveProtocol::constant(A);
  if (drive == "kicked") p.drive = DriveProtocol::kicked(A, tau0, tau1);
  if (drive == "ramp") p.drive = DriveProtocol::ramp(v);
  return p;
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  auto real = [](double x) { return io::format_real(x); };
  auto grid = [&](const Grid& g) { return real(g.start) + ":" + real(g.stop) + ":" + std::to_string(g.count); };
  std::string nl;
  for (std::size_t i = 0; i < N_list.size(); ++i) nl += (i ? "," : "") + std::to_string(N_list[i]);
  os << "subcommand=" << subcommand << '\n'
     << "N=" << N << '\n'
     << "c=" << real(c) << '\n'
     << "A=" << real(A) << '\n'
     << "sign=" << sign << '\n'
     << "drive=" << drive << '\n'
     << "tau0=" << real(tau0) << '\n'
     << "tau1=" << real(tau1) << '\n'
     << "v=" << real(v) << '\n'
     << "theta=" << real(theta) << '\n'
     << "phi=" << real(phi) << '\n'
     << "t_end=" << real(t_end) << '\n'
     << "dt=" << real(dt) << '\n'
     << "amplitudes=" << amplitudes << '\n'
     << "N_list=" << nl << '\n'
     << "A_grid=" << grid(A_grid) << '\n'
     << "c_grid=" << grid(c_grid) << '\n'
     << "periods=" << periods << '\n'
     << "delta0=" << real(delta0) << '\n'
     << "seeds=" << seeds << '\n'
     << "spread_threshold=" << real(spread_threshold) << '\n'
     << "g=" << real(g) << '\n'
     << "tier=" << tier << '\n'
     << "regime=" << regime << '\n'
     << "N_min=" << N_min << '\n'
     << "A_max=" << real(A_max) << '\n'
     << "pole=" << pole << '\n'
     << "sample_every=" << sample_every << '\n'
     << "input=" << input << '\n'
     << "column=" << column << '\n';
  return os.str();
}

std::uint64_t RunConfig::hash() const {
  // FNV-1a, stable across platforms and runs.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunConfig parse_config_text(const std::string& subcommand, const std::string& text, const std::string& origin,
                            const std::vector<Override>& overrides) {
  const auto& subs = subcommands();
  if (std::find(subs.begin(), subs.end(), subcommand) == subs.end())
    throw ConfigError("", "command line", "unknown subcommand '" + subcommand + "'");
  RunConfig cfg;
  cfg.subcommand = subcommand;
  apply_defaults(cfg);
  std::map<std::string, std::string> where;
  for (const Source& src : read_sources(subcommand, text, origin)) apply(cfg, where, src);
  for (const auto& [key, value] : overrides) apply(cfg, where, {key, value, "command line (--" + key + ")"});

  // Defaults that depend on other values.
  if (subcommand == "qkr" && !cfg.explicit_keys.contains("t_end")) cfg.t_end = cfg.periods * (cfg.tau0 + cfg.tau1);
  if (subcommand == "qpt" && !cfg.explicit_keys.contains("A_max")) cfg.A_max = 2 * std::abs(cfg.c);
  validate(cfg, where);
  return cfg;
}

RunConfig parse_config(const std::string& subcommand, const std::optional<std::string>& path,
                       const std::vector<Override>& overrides) {
  std::string text;
  std::string origin = "<none>";
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("", *path, "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    origin = *path;
  }
  return parse_config_text(subcommand, text, origin, overrides);
}

}  // namespace twomode
