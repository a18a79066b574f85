#include "hauv/guidance.hpp"

#include <cmath>

#include "hauv/errors.hpp"
#include "hauv/model.hpp"

namespace hauv {

PathSegment::PathSegment(const Vec2& s, const Vec2& e) : start(s), end(e) {
  if ((e - s).norm() < 1e-9) {
    throw Error(ErrorCode::InvalidGeometry, "path segment endpoints coincide");
  }
}

double PathSegment::beta() const {
  const Vec2 d = end - start;
  return std::atan2(d.y(), d.x());
}

double PathSegment::length() const { return (end - start).norm(); }

double PathSegment::along_track(const Vec2& pos) const {
  const Vec2 d = (end - start).normalized();
  return (pos - start).dot(d);
}

double los_heading(const Vec2& pos, const PathSegment& seg, double look_ahead) {
  const Vec2 dir = (seg.end - seg.start).normalized();
  const double s = seg.along_track(pos);
  const double s_los = std::min(s + look_ahead, seg.length());
  const Vec2 target = seg.start + s_los * dir;
  const Vec2 to_target = target - pos;
  if (to_target.norm() < 1e-12) return seg.beta();
  return std::atan2(to_target.y(), to_target.x());
}

CrossTrack cross_track(const Vec2& pos, double psi, const PathSegment& seg) {
  const double beta = seg.beta();
  // Starboard normal of the path direction in NED.
  const Vec2 normal(-std::sin(beta), std::cos(beta));
  CrossTrack ct;
  ct.e = (pos - seg.start).dot(normal);
  ct.e_v = ct.e * std::cos(beta - psi);
  return ct;
}

double SwayPid::step(double ev, double vdot, double dt) {
  if (g_.integ_gate <= 0.0 || std::abs(ev) <= g_.integ_gate) {
    integral_ += ev * dt;
  }
  if (g_.integ_limit > 0.0 && g_.ki > 0.0) {
    const double cap = g_.integ_limit / g_.ki;
    integral_ = std::clamp(integral_, -cap, cap);
  }
  const double out = g_.kp * ev + g_.ki * integral_ + g_.kd * vdot;
  return std::clamp(out, -v_max_, v_max_);
}

PathFollower::PathFollower(std::vector<Waypoint> waypoints, VerticalMode vmode, double speed,
                           const GuidanceConfig& cfg)
    : waypoints_(std::move(waypoints)),
      vmode_(vmode),
      speed_(speed),
      cfg_(cfg),
      sway_pid_(cfg.sway, cfg.v_max) {
  if (waypoints_.size() < 2) done_ = true;
  mode_ = cfg_.sway_augmented ? GuidanceMode::sway_los : GuidanceMode::heading_los;
}

PathSegment PathFollower::active_segment() const {
  return PathSegment(waypoints_[seg_index_].ne, waypoints_[seg_index_ + 1].ne);
}

Setpoints PathFollower::step(const Pose& pose, const BodyVelocity& nu, double seabed_depth,
                             double dt) {
  Setpoints sp;
  if (done_) {
    sp.mission_complete = true;
    return sp;
  }

  const Vec2 pos(pose.x, pose.y);
  // Advance the leg once the along-track coordinate passes the segment end.
  // The lateral trim of the old leg does not carry over.
  while (active_segment().along_track(pos) >= active_segment().length()) {
    if (seg_index_ + 2 >= static_cast<int>(waypoints_.size())) {
      done_ = true;
      sp.mission_complete = true;
      ct_ = CrossTrack{};
      return sp;
    }
    ++seg_index_;
    sway_pid_.reset();
  }

  const PathSegment seg = active_segment();
  ct_ = cross_track(pos, pose.psi, seg);

  // Filtered finite difference of the measured sway velocity.
  const double vdot_raw = have_prev_ ? (nu.v - v_prev_) / dt : 0.0;
  v_prev_ = nu.v;
  have_prev_ = true;
  vdot_filtered_ += (vdot_raw - vdot_filtered_) * dt / std::max(cfg_.accel_filter_tau, dt);

  if (cfg_.sway_augmented) {
    // Hysteresis: leave the band before switching.
    if (std::abs(ct_.e) > cfg_.e_on && mode_ == GuidanceMode::sway_los) {
      mode_ = GuidanceMode::heading_los;
      sway_pid_.reset();
    } else if (std::abs(ct_.e) < cfg_.e_off && mode_ == GuidanceMode::heading_los) {
      mode_ = GuidanceMode::sway_los;
      sway_pid_.reset();
    }
  } else {
    mode_ = GuidanceMode::heading_los;
  }

  if (mode_ == GuidanceMode::heading_los) {
    sp.psi_req = los_heading(pos, seg, cfg_.look_ahead);
    sp.v_req = 0.0;
  } else {
    sp.psi_req = seg.beta();
    // Positive lateral error demands a port-ward sway to close it.
    sp.v_req = sway_pid_.step(-ct_.e_v, vdot_filtered_, dt);
  }

  sp.u_req = speed_;
  if (cfg_.slow_in_turns) {
    const double err = wrap_angle(sp.psi_req - pose.psi);
    sp.u_req *= std::clamp(std::cos(err), 0.08, 1.0);
    // Brake into a corner so the turn starts nearly on the spot.
    if (cfg_.corner_brake_dist > 0.0 &&
        seg_index_ + 2 < static_cast<int>(waypoints_.size())) {
      const PathSegment next(waypoints_[seg_index_ + 1].ne, waypoints_[seg_index_ + 2].ne);
      const double turn = std::abs(wrap_angle(next.beta() - seg.beta()));
      if (turn > 0.5) {
        const double to_go = seg.length() - seg.along_track(pos);
        sp.u_req *= std::clamp(to_go / cfg_.corner_brake_dist, 0.25, 1.0);
      }
    }
  }

  const Waypoint& target = waypoints_[seg_index_ + 1];
  sp.z_req = vmode_ == VerticalMode::depth ? target.vertical : seabed_depth - target.vertical;
  return sp;
}

InnerLoops::InnerLoops(const InnerLoopGains& gains)
    : gains_(gains),
      heading_(gains.heading),
      surge_(gains.surge),
      sway_(gains.sway_vel),
      depth_(gains.depth) {}

void InnerLoops::reset() {
  heading_.reset();
  surge_.reset();
  sway_.reset();
  depth_.reset();
}

GeneralizedForce InnerLoops::step(const Setpoints& sp, const Pose& pose, const BodyVelocity& nu,
                                  double dt) {
  GeneralizedForce tau;
  tau.N = heading_.step(wrap_angle(sp.psi_req - pose.psi), nu.r, dt);
  tau.X = surge_.step(sp.u_req - nu.u, 0.0, dt);
  tau.Y = gains_.sway_actuated ? sway_.step(sp.v_req - nu.v, 0.0, dt) : 0.0;
  // Depth-rate damping uses the Earth-frame descent rate.
  const double z_rate = velocity_transform(pose, nu)[2];
  tau.Z = depth_.step(sp.z_req - pose.z, z_rate, dt);
  return tau;
}

}  // namespace hauv
