#include "hauv/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "hauv/errors.hpp"

namespace hauv {

double SeabedGrid::depth(double north, double east) const {
  if (rows < 2 || cols < 2 || depths.size() != static_cast<size_t>(rows * cols)) {
    throw Error(ErrorCode::ConfigError, "seabed grid needs at least 2x2 samples");
  }
  const double gi = std::clamp((north - origin.x()) / spacing, 0.0, rows - 1.0);
  const double gj = std::clamp((east - origin.y()) / spacing, 0.0, cols - 1.0);
  const int i0 = std::min(static_cast<int>(gi), rows - 2);
  const int j0 = std::min(static_cast<int>(gj), cols - 2);
  const double fi = gi - i0;
  const double fj = gj - j0;
  auto at = [&](int i, int j) { return depths[i * cols + j]; };
  return (1 - fi) * ((1 - fj) * at(i0, j0) + fj * at(i0, j0 + 1)) +
         fi * ((1 - fj) * at(i0 + 1, j0) + fj * at(i0 + 1, j0 + 1));
}

void Environment::validate() const {
  if (!(rho > 0.0)) throw Error(ErrorCode::ConfigError, "water density must be > 0");
  if (current.norm() >= 2.0) {
    throw Error(ErrorCode::ConfigError, "current magnitude must stay below 2 m/s");
  }
}

Simulator::Simulator(VehicleModel model, ThrusterBank bank, VehicleGeometry geom,
                     Environment env, SimOptions options)
    : model_(std::move(model)),
      bank_(std::move(bank)),
      geom_(std::move(geom)),
      env_(env),
      options_(options) {
  env_.validate();
  if (bank_.size() != 5) {
    throw Error(ErrorCode::DimensionMismatch, "the thruster bank must hold five thrusters");
  }
  for (const auto& spec : bank_) spec.validate();
  B_ = config_matrix(geom_);
}

std::pair<Vec5, GeneralizedForce> Simulator::propulsion(const Pose& pose,
                                                        const BodyVelocity& nu,
                                                        const Vec5& n) const {
  const BodyVelocity rel = model_.relative_velocity(pose, nu, env_.current);
  Vec5 f;
  bool tunnel_active = false;
  for (int i = 0; i < 5; ++i) {
    const auto& spec = bank_[i];
    const double ni = std::clamp(n[i], -spec.n_max, spec.n_max);
    f[i] = effective_thrust(spec, ni, rel.u, env_.rho);
    if (spec.kind == ThrusterKind::tunnel && std::abs(ni) > 1e-9) tunnel_active = true;
  }
  GeneralizedForce tau = GeneralizedForce::from_vec(B_ * f);
  if (options_.torque_roll_model) {
    Vec5 clamped = n;
    for (int i = 0; i < 5; ++i) clamped[i] = std::clamp(n[i], -bank_[i].n_max, bank_[i].n_max);
    tau.K += propeller_torque_moment(bank_, clamped, env_.rho);
  }
  tau.X += tunnel_jet_drag(model_.mass_props().displaced_volume, options_.jet_drag_cd, rel.u,
                           env_.rho, tunnel_active);
  return {f, tau};
}

Simulator::State17 Simulator::derivative(const State17& y, const Vec5& n_cmd) const {
  const Pose pose = Pose::from_vec(y.segment<6>(0));
  const BodyVelocity nu = BodyVelocity::from_vec(y.segment<6>(6));
  const Vec5 n = y.segment<5>(12);

  const auto [f, tau] = propulsion(pose, nu, n);
  (void)f;
  State17 dy;
  dy.segment<6>(0) = velocity_transform(pose, nu);
  dy.segment<6>(6) = model_.dynamics_rhs(pose, nu, tau, env_.current).vec();
  if (options_.command_lag > 0.0) {
    dy.segment<5>(12) = (n_cmd - n) / options_.command_lag;
  } else {
    dy.segment<5>(12).setZero();
  }
  return dy;
}

SimState Simulator::step(const SimState& state, const Vec5& n_cmd, double dt) const {
  if (!(dt > 0.0) || dt > 0.1) {
    throw Error(ErrorCode::ConfigError, "step size must lie in (0, 0.1]");
  }
  Vec5 cmd = n_cmd;
  for (int i = 0; i < 5; ++i) cmd[i] = std::clamp(cmd[i], -bank_[i].n_max, bank_[i].n_max);

  State17 y;
  y.segment<6>(0) = state.pose.vec();
  y.segment<6>(6) = state.nu.vec();
  y.segment<5>(12) = options_.command_lag > 0.0 ? state.n_achieved : cmd;

  const State17 k1 = derivative(y, cmd);
  const State17 k2 = derivative(y + 0.5 * dt * k1, cmd);
  const State17 k3 = derivative(y + 0.5 * dt * k2, cmd);
  const State17 k4 = derivative(y + dt * k3, cmd);
  const State17 y1 = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

  if (!y1.allFinite() || y1.cwiseAbs().maxCoeff() > options_.blowup_limit) {
    throw Error(ErrorCode::NumericalBlowup, "state magnitude exceeded the blow-up limit");
  }

  SimState out = state;
  out.t = state.t + dt;
  out.pose = Pose::from_vec(y1.segment<6>(0)).wrapped();
  out.nu = BodyVelocity::from_vec(y1.segment<6>(6));
  out.n_achieved = options_.command_lag > 0.0 ? Vec5(y1.segment<5>(12)) : cmd;
  return out;
}

namespace {

// Rotational speed that produces the requested open-water thrust.
double thrust_to_speed(const ThrusterSpec& spec, double f, double rho) {
  const double denom = rho * std::pow(spec.diameter, 4.0) * spec.kt * spec.bollard_factor;
  if (denom <= 0.0) return 0.0;
  const double n = std::sqrt(std::abs(f) / denom);
  return std::clamp(std::copysign(n, f), -spec.n_max, spec.n_max);
}

std::string mode_name(GuidanceMode m) {
  return m == GuidanceMode::sway_los ? "sway" : "heading";
}

}  // namespace

MissionResult run_mission(const MissionPlan& plan, const Simulator& sim,
                          const GuidanceConfig& guidance, const InnerLoopGains& gains,
                          const AllocationProblem& alloc_template,
                          const WeightScheduleParams& schedule, const RunOptions& run) {
  plan.validate();
  MissionResult result;

  GuidanceConfig gcfg = guidance;
  InnerLoopGains igains = gains;
  AllocationProblem problem = alloc_template;
  if (run.controller == ControllerVariant::original) {
    // Under-actuated baseline: heading-only law, no sway demand, and the
    // lateral tunnels held out of the allocation.
    gcfg.sway_augmented = false;
    igains.sway_actuated = false;
    problem.available[3] = false;
    problem.available[4] = false;
  }

  PathFollower follower(plan.waypoints, plan.vertical_mode, plan.speed, gcfg);
  InnerLoops inner(igains);
  problem.B0 = controllable_config_matrix(config_matrix(sim.geometry()));

  const double dt = sim.options().dt;
  const double timeout =
      run.timeout_s > 0.0 ? run.timeout_s : 3.0 * plan.path_length() / plan.speed + 300.0;

  SimState state = run.initial;
  if (run.start_on_path && plan.waypoints.size() >= 2) {
    const Waypoint& wp0 = plan.waypoints.front();
    state.pose.x = wp0.ne.x();
    state.pose.y = wp0.ne.y();
    state.pose.psi = PathSegment(plan.waypoints[0].ne, plan.waypoints[1].ne).beta();
    const double seabed0 = sim.environment().seabed(wp0.ne.x(), wp0.ne.y());
    state.pose.z = plan.vertical_mode == VerticalMode::depth ? wp0.vertical
                                                             : seabed0 - wp0.vertical;
  }
  double sum_e2 = 0.0;
  double max_roll = 0.0;
  double distance = 0.0;
  long steps = 0;

  auto log_record = [&](const SimState& s, const GeneralizedForce& tau, const Vec5& f) {
    TrajectoryRecord rec;
    rec.t = s.t;
    rec.pose = s.pose;
    rec.nu = s.nu;
    rec.tau = tau;
    rec.f = f;
    rec.mode = follower.done() ? "none" : mode_name(follower.mode());
    rec.e = s.e;
    rec.ev = s.ev;
    result.log.records.push_back(rec);
  };

  while (true) {
    const double seabed = sim.environment().seabed(state.pose.x, state.pose.y);
    const Setpoints sp = follower.step(state.pose, state.nu, seabed, dt);
    if (sp.mission_complete) break;
    if (state.t >= timeout) {
      result.timed_out = true;
      break;
    }

    const GeneralizedForce tau_c = inner.step(sp, state.pose, state.nu, dt);
    problem.tau = controllable_rows(tau_c);
    problem.weights = weight_schedule(state.nu.u, schedule);
    const AllocationResult alloc = allocate(problem);

    Vec5 n_cmd;
    for (int i = 0; i < 5; ++i) n_cmd[i] = thrust_to_speed(sim.bank()[i], alloc.f[i], sim.environment().rho);
    result.commands.samples.push_back({state.t, n_cmd});

    state.mode = follower.mode();
    state.e = follower.e();
    state.ev = follower.e_v();
    if (steps % sim.options().log_decimation == 0) log_record(state, tau_c, alloc.f);

    const Pose before = state.pose;
    state = sim.step(state, n_cmd, dt);
    state.t = run.initial.t + (++steps) * dt;  // keep stamps exactly uniform

    sum_e2 += follower.e() * follower.e();
    max_roll = std::max(max_roll, std::abs(state.pose.phi));
    distance += std::hypot(state.pose.x - before.x, state.pose.y - before.y);
  }

  // Final sample so the log closes on the terminal state.
  log_record(state, GeneralizedForce{}, Vec5::Zero());

  result.metrics.rms_cross_track_m = steps > 0 ? std::sqrt(sum_e2 / steps) : 0.0;
  result.metrics.max_roll_deg = max_roll * 180.0 / M_PI;
  result.metrics.duration_s = state.t;
  result.metrics.distance_m = distance;
  return result;
}

TrajectoryLog replay(const RpmLog& commands, const Simulator& sim, const SimState& initial) {
  if (commands.samples.empty()) {
    throw Error(ErrorCode::MalformedLog, "command log holds no samples");
  }
  TrajectoryLog log;
  const double dt = sim.options().dt;
  SimState state = initial;
  state.t = commands.samples.front().t;
  const double t_end = commands.samples.back().t;
  size_t idx = 0;
  long steps = 0;
  const double t0 = state.t;

  auto record = [&](const SimState& s, const Vec5& f, const GeneralizedForce& tau) {
    TrajectoryRecord rec;
    rec.t = s.t;
    rec.pose = s.pose;
    rec.nu = s.nu;
    rec.tau = tau;
    rec.f = f;
    rec.mode = "none";
    log.records.push_back(rec);
  };

  while (state.t < t_end - 1e-12) {
    while (idx + 1 < commands.samples.size() && commands.samples[idx + 1].t <= state.t + 1e-12) {
      ++idx;
    }
    const Vec5 n_cmd = commands.samples[idx].n;
    if (steps % sim.options().log_decimation == 0) {
      const auto [f, tau] = sim.propulsion(state.pose, state.nu, state.n_achieved);
      record(state, f, tau);
    }
    state = sim.step(state, n_cmd, dt);
    state.t = t0 + (++steps) * dt;
  }
  const auto [f, tau] = sim.propulsion(state.pose, state.nu, state.n_achieved);
  record(state, f, tau);
  return log;
}

}  // namespace hauv
