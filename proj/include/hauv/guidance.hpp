#pragma once

#include <vector>

#include "hauv/pid.hpp"
#include "hauv/types.hpp"

namespace hauv {

// Straight path leg between two Earth-frame waypoints.
struct PathSegment {
  Vec2 start = Vec2::Zero();  // (north, east) [m]
  Vec2 end = Vec2::Zero();

  PathSegment() = default;
  PathSegment(const Vec2& s, const Vec2& e);

  double beta() const;    // path direction [rad]
  double length() const;
  double along_track(const Vec2& pos) const;
};

// Heading toward the interception point a look-ahead distance beyond the
// orthogonal projection of the vehicle, clamped to the segment end.
double los_heading(const Vec2& pos, const PathSegment& seg, double look_ahead);

struct CrossTrack {
  double e = 0.0;    // signed, positive to starboard of the path direction [m]
  double e_v = 0.0;  // lateral component e cos(beta - psi) [m]
};
CrossTrack cross_track(const Vec2& pos, double psi, const PathSegment& seg);

// Sway-velocity demand from the lateral error: kp e + ki int e dt + kd vdot,
// with a clamped integrator and a saturated output.
class SwayPid {
public:
  SwayPid() = default;
  SwayPid(const PidGains& gains, double v_max) : g_(gains), v_max_(v_max) {}

  double step(double ev, double vdot, double dt);
  void reset() { integral_ = 0.0; }

private:
  PidGains g_;
  double v_max_ = 0.3;
  double integral_ = 0.0;
};

enum class GuidanceMode { heading_los, sway_los };

struct Setpoints {
  double psi_req = 0.0;   // [rad]
  double v_req = 0.0;     // [m/s]
  double u_req = 0.0;     // [m/s]
  double z_req = 0.0;     // depth setpoint [m]
  bool mission_complete = false;
};

struct Waypoint {
  Vec2 ne = Vec2::Zero();  // (north, east) [m]
  double vertical = 0.0;   // depth or altitude target [m], per plan mode
};

enum class VerticalMode { depth, altitude };

struct GuidanceConfig {
  double look_ahead = 3.2;      // [m], two hull lengths
  double e_on = 1.0;            // [m], switch to the heading law above this
  double e_off = 0.5;           // [m], switch to the sway law below this
  double v_max = 0.3;           // [m/s] sway demand saturation
  double accel_filter_tau = 0.5;// [s] first-order filter on the sway rate
  bool sway_augmented = true;   // false = classic heading-only law
  bool slow_in_turns = true;    // scale the surge demand by cos(heading error)
  double corner_brake_dist = 0.6;  // [m] decelerate inside this range of a turn
  PidGains sway{0.6, 0.15, 0.0, 0.25, 0.0, 0.3};  // lateral-error PID
};

// Stateful waypoint follower: advances legs on the along-track coordinate,
// switches between the heading law and the sway law with hysteresis, and
// produces the outer-loop setpoints.
class PathFollower {
public:
  PathFollower(std::vector<Waypoint> waypoints, VerticalMode vmode, double speed,
               const GuidanceConfig& cfg);

  Setpoints step(const Pose& pose, const BodyVelocity& nu, double seabed_depth, double dt);

  GuidanceMode mode() const { return mode_; }
  double e() const { return ct_.e; }
  double e_v() const { return ct_.e_v; }
  int segment_index() const { return seg_index_; }
  bool done() const { return done_; }

private:
  PathSegment active_segment() const;

  std::vector<Waypoint> waypoints_;
  VerticalMode vmode_;
  double speed_;
  GuidanceConfig cfg_;
  SwayPid sway_pid_;
  GuidanceMode mode_ = GuidanceMode::sway_los;
  CrossTrack ct_;
  int seg_index_ = 0;
  bool done_ = false;
  double v_prev_ = 0.0;
  double vdot_filtered_ = 0.0;
  bool have_prev_ = false;
};

struct InnerLoopGains {
  PidGains heading{28.0, 0.4, 24.0, 10.0, 55.0, 0.35};
  PidGains surge{110.0, 20.0, 0.0, 25.0, 60.0, 0.15};
  PidGains sway_vel{90.0, 16.0, 0.0, 30.0, 60.0, 0.2};
  PidGains depth{45.0, 4.0, 55.0, 15.0, 35.0, 0.0};
  bool sway_actuated = true;  // false = under-actuated original configuration
};

// Independent PID loops turning the guidance setpoints into a generalized
// force demand on the controllable axes.
class InnerLoops {
public:
  InnerLoops() : InnerLoops(InnerLoopGains{}) {}
  explicit InnerLoops(const InnerLoopGains& gains);

  GeneralizedForce step(const Setpoints& sp, const Pose& pose, const BodyVelocity& nu,
                        double dt);
  void reset();

private:
  InnerLoopGains gains_;
  Pid heading_;
  Pid surge_;
  Pid sway_;
  Pid depth_;
};

}  // namespace hauv
