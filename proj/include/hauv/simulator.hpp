#pragma once

#include <functional>
#include <optional>

#include "hauv/allocation.hpp"
#include "hauv/guidance.hpp"
#include "hauv/mission.hpp"
#include "hauv/model.hpp"
#include "hauv/propulsion.hpp"
#include "hauv/trajectory.hpp"
#include "hauv/types.hpp"

namespace hauv {

// Regular-grid seabed depth, bilinearly interpolated and edge-clamped.
struct SeabedGrid {
  Vec2 origin = Vec2::Zero();  // (north, east) of cell (0, 0)
  double spacing = 1.0;        // [m]
  int rows = 0;                // north count
  int cols = 0;                // east count
  std::vector<double> depths;  // row-major [m]

  double depth(double north, double east) const;
};

struct Environment {
  Vec3 current = Vec3::Zero();  // steady Earth-frame current, NED [m/s]
  double rho = 1025.0;          // [kg/m^3]
  double seabed_depth = 30.0;   // constant field [m]
  std::optional<SeabedGrid> seabed_grid;

  double seabed(double north, double east) const {
    return seabed_grid ? seabed_grid->depth(north, east) : seabed_depth;
  }
  void validate() const;  // rho > 0, |current| < 2 m/s
};

struct SimState {
  double t = 0.0;
  Pose pose;
  BodyVelocity nu;
  Vec5 n_achieved = Vec5::Zero();  // [rev/s]
  GuidanceMode mode = GuidanceMode::heading_los;
  double e = 0.0;
  double ev = 0.0;
};

struct SimOptions {
  double dt = 0.01;             // [s], must be in (0, 0.1]
  double command_lag = 0.1;     // first-order thruster lag [s]; 0 = instantaneous
  bool torque_roll_model = true;
  double jet_drag_cd = 0.1;     // tunnel-jet drag on the displaced-volume scale
  double blowup_limit = 1e6;
  int log_decimation = 10;      // record every Nth step
};

// Fixed-step RK4 propagation of the coupled pose/velocity/thruster state
// under rotational-speed commands.
class Simulator {
public:
  Simulator(VehicleModel model, ThrusterBank bank, VehicleGeometry geom, Environment env,
            SimOptions options);

  // One macro step of length dt; commands are held over the step. Throws
  // NumericalBlowup when any state magnitude passes the limit.
  SimState step(const SimState& state, const Vec5& n_cmd, double dt) const;

  // Thrust forces and the resulting generalized force at the given state.
  std::pair<Vec5, GeneralizedForce> propulsion(const Pose& pose, const BodyVelocity& nu,
                                               const Vec5& n) const;

  const VehicleModel& model() const { return model_; }
  const Environment& environment() const { return env_; }
  const SimOptions& options() const { return options_; }
  const VehicleGeometry& geometry() const { return geom_; }
  const ThrusterBank& bank() const { return bank_; }

private:
  using State17 = Eigen::Matrix<double, 17, 1>;
  State17 derivative(const State17& y, const Vec5& n_cmd) const;

  VehicleModel model_;
  ThrusterBank bank_;
  VehicleGeometry geom_;
  Mat65 B_;
  Environment env_;
  SimOptions options_;
};

enum class ControllerVariant { original, modified };

struct RunOptions {
  ControllerVariant controller = ControllerVariant::modified;
  double timeout_s = 0.0;       // 0 = derived from the plan (3x nominal + 300 s)
  bool start_on_path = true;    // place the vehicle on the first leg at depth
  SimState initial;             // used as given when start_on_path is false
};

struct MissionResult {
  TrajectoryLog log;
  RpmLog commands;         // one sample per control step
  MissionMetrics metrics;
  bool timed_out = false;
};

// Closed-loop mission: guidance -> inner loops -> speed-scheduled RPI
// allocation -> thruster commands -> plant, until MissionComplete or timeout.
MissionResult run_mission(const MissionPlan& plan, const Simulator& sim,
                          const GuidanceConfig& guidance, const InnerLoopGains& gains,
                          const AllocationProblem& alloc_template,
                          const WeightScheduleParams& schedule, const RunOptions& run = {});

// Open-loop rerun of a recorded command log (zero-order hold between
// samples) from the given initial state.
TrajectoryLog replay(const RpmLog& commands, const Simulator& sim, const SimState& initial);

}  // namespace hauv
