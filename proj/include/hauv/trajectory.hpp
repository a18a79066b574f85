#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hauv/types.hpp"

namespace hauv {

// One decimated simulation sample: state, demanded generalized force,
// allocated per-thruster forces and the guidance internals.
struct TrajectoryRecord {
  double t = 0.0;
  Pose pose;
  BodyVelocity nu;
  GeneralizedForce tau;
  Vec5 f = Vec5::Zero();
  std::string mode = "none";  // "heading", "sway" or "none"
  double e = 0.0;
  double ev = 0.0;
};

struct TrajectoryLog {
  std::vector<TrajectoryRecord> records;

  void write_csv(std::ostream& os) const;
  void write_csv_file(const std::string& path) const;
  static TrajectoryLog read_csv(std::istream& is);
  static TrajectoryLog read_csv_file(const std::string& path);
};

// Timed rotational-speed commands, zero-order held between samples.
struct RpmSample {
  double t = 0.0;
  Vec5 n = Vec5::Zero();
};

struct RpmLog {
  std::vector<RpmSample> samples;

  void write_csv(std::ostream& os) const;
  void write_csv_file(const std::string& path) const;
  // Throws MalformedLog (with the line number) on bad fields or
  // non-monotone timestamps.
  static RpmLog read_csv(std::istream& is);
  static RpmLog read_csv_file(const std::string& path);
};

struct MissionMetrics {
  double rms_cross_track_m = 0.0;
  double max_roll_deg = 0.0;
  double duration_s = 0.0;
  double distance_m = 0.0;

  std::string to_json() const;
};

struct ChannelError {
  double rms = 0.0;
  double max_abs = 0.0;
};

// Per-channel simulated-vs-measured errors over the overlapping time range,
// with the simulated log linearly interpolated onto the measured stamps.
// Angle channels difference on the circle. Throws NoOverlap.
struct CompareReport {
  std::map<std::string, ChannelError> channels;
  double t_begin = 0.0;
  double t_end = 0.0;
  int samples = 0;

  std::string text() const;
  std::string to_json() const;
};

CompareReport compare(const TrajectoryLog& sim, const TrajectoryLog& measured);

}  // namespace hauv
