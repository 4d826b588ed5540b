#pragma once

#include <vector>

namespace twomode {

enum class DriveKind { off, constant, kicked, ramp };

struct DriveProtocol {
  DriveKind kind = DriveKind::off;
  double A = 0.0;
  double T = 0.0;
  double tau0 = 0.0;
  double tau1 = 0.0;
  double v = 0.0;  // ramp: a(t) = v t

  static DriveProtocol off() { return {}; }
  static DriveProtocol constant(double A);
  static DriveProtocol kicked(double A, double tau0 = 1.0, double tau1 = 0.01);
  static DriveProtocol ramp(double v);

  void validate() const;
  // Field strength inside a rectangular pulse, A T / tau1.
  double pulse_amplitude() const { return A * T / tau1; }
};

struct ModelParams {
  int N = 1;
  double c = 0.0;
  DriveProtocol drive;
  int interaction_sign = 1;

  void validate() const;
  double twist() const { return interaction_sign * c; }
};

// Interval on which the drive is a single smooth function of time.
struct DriveSegment {
  double t0 = 0.0;
  double t1 = 0.0;
  double a = 0.0;      // constant field value (unused when ramp)
  bool pulse = false;  // inside a kick
  bool ramp = false;   // a(t) = v t
  double length() const { return t1 - t0; }
};

std::vector<DriveSegment> drive_segments(const DriveProtocol& drive, double t0, double t1);
double drive_value(const DriveProtocol& drive, double t);

// Sample grid on [0, t_end] with spacing <= dt. Kicked drives put a node on
// every pulse edge so that free and pulse segments are resolved separately.
std::vector<double> make_time_grid(const DriveProtocol& drive, double t_end, double dt);

// Step sizes for the ODE tiers. Pulses are stiff (field ~ A T / tau1), so they
// get their own, finer step and at least `min_pulse_steps` steps per pulse.
struct StepPolicy {
  double free_dt = 0.01;
  double pulse_dt = 0.001;
  int min_pulse_steps = 10;

  static StepPolicy from_dt(double dt) { return {dt, dt / 10, 10}; }
};

int substeps(const DriveSegment& seg, const DriveProtocol& drive, const StepPolicy& policy);

}  // namespace twomode
