#include <doctest.h>

#include <cmath>
#include <random>

#include "hauv/errors.hpp"
#include "hauv/guidance.hpp"

using namespace hauv;

TEST_CASE("on-path vehicle on a northbound leg looks straight ahead") {
  const PathSegment seg(Vec2(0, 0), Vec2(50, 0));
  CHECK(los_heading(Vec2(10, 0), seg, 3.2) == doctest::Approx(0.0));
}

TEST_CASE("offset vehicle aims between the path heading and the normal") {
  const PathSegment east(Vec2(0, 0), Vec2(0, 50));  // beta = pi/2
  const Vec2 pos(2.0, 10.0);                        // port side of the path
  const double psi_small = los_heading(pos, east, 1.0);
  const double psi_large = los_heading(pos, east, 500.0);
  // Looking toward the line: heading between east (pi/2) and south-ish (pi).
  CHECK(psi_small > M_PI / 2.0);
  CHECK(psi_small < M_PI);
  // Large look-ahead converges to the path heading.
  CHECK(std::abs(wrap_angle(psi_large - east.beta())) < 5e-3);
  CHECK(std::abs(wrap_angle(psi_large - east.beta())) <
        std::abs(wrap_angle(psi_small - east.beta())));
}

TEST_CASE("interception point clamps to the segment end") {
  const PathSegment seg(Vec2(0, 0), Vec2(10, 0));
  // Near the end the look-ahead would leave the segment; the target is the end.
  const double psi = los_heading(Vec2(9.5, 1.0), seg, 50.0);
  CHECK(psi == doctest::Approx(std::atan2(-1.0, 0.5)));
}

TEST_CASE("los heading matches an independent projection oracle") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> d(-30.0, 30.0);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec2 a(d(rng), d(rng));
    Vec2 b(d(rng), d(rng));
    if ((b - a).norm() < 1e-3) b += Vec2(1.0, 0.0);
    const Vec2 pos(d(rng), d(rng));
    const double dh = 0.5 + std::abs(d(rng)) * 0.2;
    const PathSegment seg(a, b);

    // Oracle: explicit projection, advance, clamp, atan2.
    const Vec2 dir = (b - a) / (b - a).norm();
    const double s = (pos - a).dot(dir);
    const double s_los = std::min(s + dh, (b - a).norm());
    const Vec2 target = a + s_los * dir;
    const double expected = std::atan2(target.y() - pos.y(), target.x() - pos.x());
    CHECK(los_heading(pos, seg, dh) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("cross-track error carries the starboard sign convention") {
  const PathSegment north(Vec2(0, 0), Vec2(20, 0));
  CHECK(cross_track(Vec2(5, 2), 0.0, north).e == doctest::Approx(2.0));   // east = starboard
  CHECK(cross_track(Vec2(5, -2), 0.0, north).e == doctest::Approx(-2.0));
  const CrossTrack on_line = cross_track(Vec2(5, 0), 0.3, north);
  CHECK(on_line.e == doctest::Approx(0.0));
  CHECK(on_line.e_v == doctest::Approx(0.0));
}

TEST_CASE("lateral error component follows cos(beta - psi)") {
  const PathSegment north(Vec2(0, 0), Vec2(20, 0));
  const CrossTrack aligned = cross_track(Vec2(5, 2), north.beta(), north);
  CHECK(aligned.e_v == doctest::Approx(aligned.e));
  const CrossTrack orthogonal = cross_track(Vec2(5, 2), north.beta() + M_PI / 2.0, north);
  CHECK(orthogonal.e_v == doctest::Approx(0.0));
  const CrossTrack at_angle = cross_track(Vec2(5, 2), 0.7, north);
  CHECK(at_angle.e_v == doctest::Approx(2.0 * std::cos(north.beta() - 0.7)));
}

TEST_CASE("degenerate segments are rejected") {
  CHECK_THROWS_AS(PathSegment(Vec2(1, 1), Vec2(1, 1)), Error);
}

TEST_CASE("sway demand is proportional for a pure-P controller") {
  SwayPid pid(PidGains{0.5, 0.0, 0.0, 0.0, 0.0}, 0.3);
  CHECK(pid.step(0.0, 0.0, 0.01) == 0.0);
  CHECK(pid.step(0.2, 0.0, 0.01) == doctest::Approx(0.1));
  CHECK(pid.step(10.0, 0.0, 0.01) == doctest::Approx(0.3));  // saturated
}

TEST_CASE("sway PID matches a discrete integration oracle step by step") {
  const PidGains g{0.4, 0.2, 0.1, 0.0, 0.0};
  SwayPid pid(g, 10.0);
  double integral = 0.0;
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  const double dt = 0.02;
  for (int k = 0; k < 500; ++k) {
    const double ev = d(rng);
    const double vdot = d(rng);
    integral += ev * dt;
    const double expected = g.kp * ev + g.ki * integral + g.kd * vdot;
    CHECK(pid.step(ev, vdot, dt) == doctest::Approx(expected).epsilon(1e-9));
  }
}

namespace {

std::vector<Waypoint> two_leg_plan() {
  return {{Vec2(0, 0), 5.0}, {Vec2(20, 0), 5.0}, {Vec2(20, 10), 5.0}};
}

GuidanceConfig test_config() {
  GuidanceConfig cfg;
  cfg.e_on = 1.0;
  cfg.e_off = 0.5;
  return cfg;
}

}  // namespace

TEST_CASE("on-path follower runs the sway law and holds the path heading") {
  PathFollower f(two_leg_plan(), VerticalMode::depth, 0.2, test_config());
  Pose pose;
  pose.x = 5.0;
  const Setpoints sp = f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::sway_los);
  CHECK(sp.psi_req == doctest::Approx(0.0));
  CHECK(sp.z_req == doctest::Approx(5.0));
}

TEST_CASE("large cross-track error selects the heading law") {
  PathFollower f(two_leg_plan(), VerticalMode::depth, 0.2, test_config());
  Pose pose;
  pose.x = 5.0;
  pose.y = 5.0;  // |e| = 5 with e_on = 1
  const Setpoints sp = f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::heading_los);
  const double expected = los_heading(Vec2(5, 5), PathSegment(Vec2(0, 0), Vec2(20, 0)), 3.2);
  CHECK(sp.psi_req == doctest::Approx(expected));
  CHECK(sp.v_req == 0.0);
}

TEST_CASE("mode holds inside the hysteresis band") {
  PathFollower f(two_leg_plan(), VerticalMode::depth, 0.2, test_config());
  Pose pose;
  pose.x = 5.0;
  pose.y = 0.7;  // between e_off and e_on
  f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::sway_los);  // started in sway, stays

  pose.y = 5.0;
  f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::heading_los);
  pose.y = 0.7;  // back inside the band: still heading
  f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::heading_los);
  pose.y = 0.2;  // below e_off: sway again
  f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::sway_los);
}

TEST_CASE("legs advance on the along-track coordinate and the mission completes") {
  PathFollower f(two_leg_plan(), VerticalMode::depth, 0.2, test_config());
  Pose pose;
  pose.x = 20.5;  // past the first leg end
  pose.y = 0.0;
  const Setpoints sp = f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK_FALSE(sp.mission_complete);
  CHECK(f.segment_index() == 1);
  CHECK(sp.psi_req == doctest::Approx(M_PI / 2.0));  // second leg runs east

  pose.x = 20.0;
  pose.y = 10.5;  // past the final waypoint
  const Setpoints done = f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(done.mission_complete);
  CHECK(f.done());
  // Stays complete afterwards.
  CHECK(f.step(pose, BodyVelocity{}, 30.0, 0.01).mission_complete);
}

TEST_CASE("altitude missions convert the bottom range into a depth setpoint") {
  PathFollower f(two_leg_plan(), VerticalMode::altitude, 0.2, test_config());
  Pose pose;
  pose.x = 5.0;
  const Setpoints sp = f.step(pose, BodyVelocity{}, 12.0, 0.01);
  CHECK(sp.z_req == doctest::Approx(12.0 - 5.0));
}

TEST_CASE("positive lateral error demands port-ward sway") {
  GuidanceConfig cfg = test_config();
  cfg.sway = PidGains{0.5, 0.0, 0.0, 0.0, 0.0};
  PathFollower f(two_leg_plan(), VerticalMode::depth, 0.2, cfg);
  Pose pose;
  pose.x = 5.0;
  pose.y = 0.4;  // starboard of the path, inside the sway band
  const Setpoints sp = f.step(pose, BodyVelocity{}, 30.0, 0.01);
  CHECK(f.mode() == GuidanceMode::sway_los);
  CHECK(sp.v_req == doctest::Approx(-0.2));  // kp * e with the closing sign
}

TEST_CASE("inner loops are quiet at zero error and proportional in heading") {
  InnerLoopGains gains;
  gains.heading = PidGains{12.0, 0.0, 0.0, 0.0, 0.0};
  gains.surge = PidGains{50.0, 0.0, 0.0, 0.0, 0.0};
  gains.sway_vel = PidGains{40.0, 0.0, 0.0, 0.0, 0.0};
  gains.depth = PidGains{30.0, 0.0, 0.0, 0.0, 0.0};
  InnerLoops loops(gains);
  Setpoints sp;
  const GeneralizedForce quiet = loops.step(sp, Pose{}, BodyVelocity{}, 0.01);
  CHECK(quiet.vec().norm() == 0.0);

  Setpoints heading_sp;
  heading_sp.psi_req = 0.1;
  const GeneralizedForce tau = loops.step(heading_sp, Pose{}, BodyVelocity{}, 0.01);
  CHECK(tau.N == doctest::Approx(12.0 * 0.1));
}

TEST_CASE("heading error is computed on the circle") {
  InnerLoopGains gains;
  gains.heading = PidGains{10.0, 0.0, 0.0, 0.0, 0.0};
  InnerLoops loops(gains);
  Setpoints sp;
  sp.psi_req = M_PI - 0.05;
  Pose pose;
  pose.psi = -M_PI + 0.05;  // 0.1 rad away across the wrap
  const GeneralizedForce tau = loops.step(sp, pose, BodyVelocity{}, 0.01);
  CHECK(tau.N == doctest::Approx(-10.0 * 0.1).epsilon(1e-9));
}

TEST_CASE("the under-actuated configuration never demands sway force") {
  InnerLoopGains gains;
  gains.sway_actuated = false;
  InnerLoops loops(gains);
  Setpoints sp;
  sp.v_req = 0.3;
  const GeneralizedForce tau = loops.step(sp, Pose{}, BodyVelocity{}, 0.01);
  CHECK(tau.Y == 0.0);
}
