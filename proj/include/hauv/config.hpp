#pragma once

#include <string>

#include "hauv/allocation.hpp"
#include "hauv/coefficients.hpp"
#include "hauv/geometry.hpp"
#include "hauv/guidance.hpp"
#include "hauv/hydro.hpp"
#include "hauv/mission.hpp"
#include "hauv/propulsion.hpp"
#include "hauv/simulator.hpp"

namespace hauv {

// Everything needed to build the plant and its controllers: geometry, mass,
// thrusters, optional explicit coefficient overrides and calibration factors,
// estimator options, control gains, allocation limits and solver options.
struct VehicleConfig {
  VehicleGeometry geometry;
  MassProperties mass;
  ThrusterBank thrusters;
  CoefficientSet coefficient_overrides;  // may be partial or empty
  CalibrationFactors calibration;        // applied on top of the active set
  EstimatorOptions hydro;
  GuidanceConfig guidance;
  InnerLoopGains gains;
  Vec5 f_min = Vec5::Constant(-35.0);
  Vec5 f_max = Vec5::Constant(35.0);
  double allocation_epsilon = 1e-6;
  WeightScheduleParams schedule;
  SimOptions sim;

  // Estimated-from-geometry entries overlaid with the explicit overrides,
  // then calibrated. This is the set the simulator runs with.
  CoefficientSet active_coefficients() const;
  AllocationProblem allocation_template() const;
};

struct MissionConfig {
  SurveyRegion region;
  double spacing = 1.0;
  double speed = 0.2;
  VerticalMode vertical_mode = VerticalMode::altitude;
  double vertical = 2.0;
  CameraSettings camera;
  CameraFootprint footprint;
  Environment environment;

  MissionPlan plan() const;
};

VehicleConfig load_vehicle_config(const std::string& path);
MissionConfig load_mission_config(const std::string& path);
VehicleConfig parse_vehicle_config(const std::string& json_text);
MissionConfig parse_mission_config(const std::string& json_text);

std::string serialize(const VehicleConfig& cfg);
std::string serialize(const MissionConfig& cfg);
std::string serialize(const MissionPlan& plan);
MissionPlan parse_mission_plan(const std::string& json_text);

// Built-in stock-vehicle configuration used when no file is given and by the
// shipped config generator.
VehicleConfig default_vehicle_config();
MissionConfig default_mission_config();

}  // namespace hauv
