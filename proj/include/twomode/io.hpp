#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "twomode/breaktime.hpp"
#include "twomode/chaos.hpp"
#include "twomode/exact.hpp"
#include "twomode/bmf.hpp"
#include "twomode/hp.hpp"
#include "twomode/qpt.hpp"

namespace twomode::io {

// 17 significant digits; round-trips every double.
std::string format_real(double x);

class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& fields);
  void row(std::initializer_list<double> values);

 private:
  std::ostream& os_;
  std::size_t width_;
};

void write_exact_trajectory(std::ostream& os, std::span<const ExactSample> samples, bool amplitudes);
void write_bmf_trajectory(std::ostream& os, std::span<const BmfSample> samples, int N);
void write_hp_trajectory(std::ostream& os, std::span<const HpSample> samples);
void write_qfi_comparison(std::ostream& os, std::span<const ExactSample> exact, std::span<const BmfSample> bmf,
                          std::span<const HpSample> hp, int N);
void write_lyapunov_map(std::ostream& os, const LyapunovMap& map);
void write_poincare(std::ostream& os, std::span<const PoincarePoint> points);
void write_breaktime_records(std::ostream& os, std::span<const BreakTimeRecord> records);
void write_sweep(std::ostream& os, const SweepResult& result);

// Reads one named column of a CSV with a header row.
std::vector<double> read_csv_column(const std::string& path, const std::string& column);

}  // namespace twomode::io
