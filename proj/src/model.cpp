#include "twomode/model.hpp"

#include <algorithm>
#include <cmath>

#include "twomode/errors.hpp"

namespace twomode {

namespace {

double edge_tolerance(double t) { return 1e-12 * std::max(1.0, std::abs(t)); }

void push_overlap(std::vector<DriveSegment>& out, double t0, double t1, DriveSegment seg) {
  seg.t0 = std::max(t0, seg.t0);
  seg.t1 = std::min(t1, seg.t1);
  if (seg.t1 - seg.t0 > edge_tolerance(seg.t1)) out.push_back(seg);
}

}  // namespace

DriveProtocol DriveProtocol::constant(double A) {
  DriveProtocol d;
  d.kind = DriveKind::constant;
  d.A = A;
  return d;
}

DriveProtocol DriveProtocol::kicked(double A, double tau0, double tau1) {
  DriveProtocol d;
  d.kind = DriveKind::kicked;
  d.A = A;
  d.tau0 = tau0;
  d.tau1 = tau1;
  d.T = tau0 + tau1;
  return d;
}

DriveProtocol DriveProtocol::ramp(double v) {
  DriveProtocol d;
  d.kind = DriveKind::ramp;
  d.v = v;
  return d;
}

void DriveProtocol::validate() const {
  if (!std::isfinite(A) || !std::isfinite(v)) throw ParameterError("drive parameters must be finite");
  if (kind == DriveKind::kicked) {
    if (!(tau0 > 0.0) || !(tau1 > 0.0)) throw ParameterError("kicked drive needs tau0 > 0 and tau1 > 0");
    if (T != tau0 + tau1) throw ParameterError("kicked drive needs T = tau0 + tau1");
  }
  if (kind == DriveKind::ramp && !(v > 0.0)) throw ParameterError("ramp drive needs v > 0");
}

void ModelParams::validate() const {
  if (N < 1) throw ParameterError("N must be >= 1");
  if (interaction_sign != 1 && interaction_sign != -1)
    throw ParameterError("interaction_sign must be +1 or -1");
  if (!std::isfinite(c)) throw ParameterError("c must be finite");
  drive.validate();
}

std::vector<DriveSegment> drive_segments(const DriveProtocol& drive, double t0, double t1) {
  std::vector<DriveSegment> out;
  if (!(t1 - t0 > edge_tolerance(t1))) return out;
  switch (drive.kind) {
    case DriveKind::off:
      out.push_back({t0, t1, 0.0, false, false});
      break;
    case DriveKind::constant:
      out.push_back({t0, t1, drive.A, false, false});
      break;
    case DriveKind::ramp:
      out.push_back({t0, t1, 0.0, false, true});
      break;
    case DriveKind::kicked: {
      const double T = drive.T;
      const double amp = drive.pulse_amplitude();
      for (auto n = static_cast<long long>(std::floor(t0 / T)); n * T < t1 - edge_tolerance(t1); ++n) {
        const double start = n * T;
        const double edge = start + drive.tau1;
        const double end = (n + 1) * T;
        push_overlap(out, t0, t1, {start, edge, amp, true, false});
        push_overlap(out, t0, t1, {edge, end, 0.0, false, false});
      }
      break;
    }
  }
  return out;
}

double drive_value(const DriveProtocol& drive, double t) {
  switch (drive.kind) {
    case DriveKind::off:
      return 0.0;
    case DriveKind::constant:
      return drive.A;
    case DriveKind::ramp:
      return drive.v * t;
    case DriveKind::kicked: {
      const double phase = t - std::floor(t / drive.T) * drive.T;
      return phase < drive.tau1 ? drive.pulse_amplitude() : 0.0;
    }
  }
  return 0.0;
}

std::vector<double> make_time_grid(const DriveProtocol& drive, double t_end, double dt) {
  if (!(dt > 0.0)) throw ParameterError("dt must be positive");
  if (!(t_end >= 0.0)) throw ParameterError("t_end must be nonnegative");
  std::vector<double> grid;
  const double limit = t_end + edge_tolerance(t_end);
  if (drive.kind == DriveKind::kicked) {
    const auto np = static_cast<long long>(std::ceil(drive.tau1 / dt - 1e-9));
    const auto nf = static_cast<long long>(std::ceil(drive.tau0 / dt - 1e-9));
    for (long long n = 0;; ++n) {
      const double start = n * drive.T;
      if (start > limit) break;
      for (long long j = 0; j < np; ++j) grid.push_back(start + drive.tau1 * j / np);
      const double edge = start + drive.tau1;
      for (long long j = 0; j < nf; ++j) grid.push_back(edge + drive.tau0 * j / nf);
    }
    while (!grid.empty() && grid.back() > limit) grid.pop_back();
    return grid;
  }
  const auto n = static_cast<long long>(std::floor(t_end / dt + 1e-9));
  grid.reserve(n + 2);
  for (long long k = 0; k <= n; ++k) grid.push_back(k * dt);
  if (t_end - grid.back() > 1e-9 * dt) grid.push_back(t_end);
  return grid;
}

int substeps(const DriveSegment& seg, const DriveProtocol& drive, const StepPolicy& policy) {
  double h = policy.free_dt;
  if (seg.pulse) {
    const int per_pulse =
        std::max(policy.min_pulse_steps, static_cast<int>(std::ceil(drive.tau1 / policy.pulse_dt - 1e-9)));
    h = drive.tau1 / per_pulse;
  }
  return std::max(1, static_cast<int>(std::ceil(seg.length() / h - 1e-9)));
}

}  // namespace twomode
