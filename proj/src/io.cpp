#include "twomode/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "twomode/errors.hpp"

namespace twomode::io {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (in_quotes) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        in_quotes = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      in_quotes = true;
    } else if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os), width_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw DimensionError("CsvWriter: row width differs from header");
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os_ << ',';
    os_ << quote(fields[i]);
  }
  os_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  std::vector<std::string> f;
  f.reserve(values.size());
  for (double v : values) f.push_back(format_real(v));
  row(f);
}

void write_exact_trajectory(std::ostream& os, std::span<const ExactSample> samples, bool amplitudes) {
  std::vector<std::string> header{"t", "Jx", "Jy", "Jz", "JxJx", "JyJy", "JzJz", "JxJy", "JxJz", "JyJz", "F_Q"};
  const std::size_t dim = samples.empty() ? 0 : samples.front().amplitudes.size();
  if (amplitudes)
    for (std::size_t i = 0; i < dim; ++i) {
      header.push_back("re_" + std::to_string(i));
      header.push_back("im_" + std::to_string(i));
    }
  CsvWriter w(os, header);
  for (const ExactSample& s : samples) {
    std::vector<std::string> f{format_real(s.t)};
    for (double x : s.moments.first) f.push_back(format_real(x));
    for (double x : s.moments.second_sym) f.push_back(format_real(x));
    f.push_back(format_real(s.F_Q));
    if (amplitudes)
      for (const cplx& z : s.amplitudes) {
        f.push_back(format_real(z.real()));
        f.push_back(format_real(z.imag()));
      }
    w.row(f);
  }
}

void write_bmf_trajectory(std::ostream& os, std::span<const BmfSample> samples, int N) {
  CsvWriter w(os, {"t", "s_x", "s_y", "s_z", "D_xz", "D_yz", "D_xy", "D_xx", "D_yy", "D_zz", "F_B"});
  for (const BmfSample& s : samples) {
    std::vector<std::string> f{format_real(s.t)};
    for (double x : s.state.v) f.push_back(format_real(x));
    f.push_back(format_real(f_b(s.state, N)));
    w.row(f);
  }
}

void write_hp_trajectory(std::ostream& os, std::span<const HpSample> samples) {
  CsvWriter w(os, {"t", "qq", "pp", "qp", "n_exc", "F_HP", "hp_valid"});
  for (const HpSample& s : samples)
    w.row({format_real(s.t), format_real(s.m.qq), format_real(s.m.pp), format_real(s.m.qp), format_real(s.n_exc),
           format_real(s.F_HP), flag(s.valid)});
}

void write_qfi_comparison(std::ostream& os, std::span<const ExactSample> exact, std::span<const BmfSample> bmf,
                          std::span<const HpSample> hp, int N) {
  if (exact.size() != bmf.size() || exact.size() != hp.size())
    throw DimensionError("write_qfi_comparison: tiers sampled on different grids");
  CsvWriter w(os, {"t", "F_Q", "F_B", "F_HP"});
  for (std::size_t i = 0; i < exact.size(); ++i)
    w.row({exact[i].t, exact[i].F_Q, f_b(bmf[i].state, N), hp[i].F_HP});
}

void write_lyapunov_map(std::ostream& os, const LyapunovMap& map) {
  CsvWriter w(os, {"A", "c", "lambda_L"});
  for (std::size_t i = 0; i < map.A.size(); ++i)
    for (std::size_t j = 0; j < map.c.size(); ++j) w.row({map.A[i], map.c[j], map.at(i, j)});
}

void write_poincare(std::ostream& os, std::span<const PoincarePoint> points) {
  CsvWriter w(os, {"seed_id", "n", "phi", "s_z"});
  for (const PoincarePoint& p : points)
    w.row({std::to_string(p.seed_id), std::to_string(p.period_index), format_real(p.phi), format_real(p.s_z)});
}

void write_breaktime_records(std::ostream& os, std::span<const BreakTimeRecord> records) {
  CsvWriter w(os, {"N", "A", "c", "regime", "g", "t_IB", "ib_crossed", "t_HP", "hp_crossed"});
  const std::string nan = format_real(std::nan(""));
  for (const BreakTimeRecord& r : records)
    w.row({std::to_string(r.N), format_real(r.A), format_real(r.c), to_string(r.regime), format_real(r.g),
           r.has_ib ? format_real(r.ib.t) : nan, r.has_ib ? flag(r.ib.crossed) : "0",
           r.has_hp ? format_real(r.hp.t) : nan, r.has_hp ? flag(r.hp.crossed) : "0"});
}

void write_sweep(std::ostream& os, const SweepResult& result) {
  CsvWriter w(os, {"t", "A", "sz_exact", "sz_bmf", "F_Q", "F_B"});
  for (const SweepSample& s : result.samples) w.row({s.t, s.A, s.sz_exact, s.sz_bmf, s.F_Q, s.F_B});
}

std::vector<double> read_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("'" + path + "' is empty");
  const std::vector<std::string> header = split_csv_line(line);
  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == column) col = i;
  if (col == header.size()) throw ParameterError("'" + path + "' has no column '" + column + "'");
  std::vector<double> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (col >= f.size()) throw ParameterError(path + ":" + std::to_string(lineno) + ": short row");
    try {
      std::size_t used = 0;
      out.push_back(std::stod(f[col], &used));
    } catch (const std::exception&) {
      throw ParameterError(path + ":" + std::to_string(lineno) + ": not a number '" + f[col] + "'");
    }
  }
  return out;
}

}  // namespace twomode::io
