#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hauv/config.hpp"
#include "hauv/errors.hpp"
#include "hauv/hydro.hpp"
#include "hauv/model.hpp"
#include "hauv/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

hauv::Vec3 parse_vec3(const std::string& text) {
  std::stringstream ss(text);
  std::string field;
  std::vector<double> vals;
  while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
  if (vals.size() != 3) {
    throw hauv::Error(hauv::ErrorCode::ConfigError, "expected three comma-separated values");
  }
  return hauv::Vec3(vals[0], vals[1], vals[2]);
}

hauv::Vec4 parse_vec4(const std::string& text) {
  std::stringstream ss(text);
  std::string field;
  std::vector<double> vals;
  while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
  if (vals.size() != 4) {
    throw hauv::Error(hauv::ErrorCode::ConfigError, "expected X,Y,Z,N");
  }
  return hauv::Vec4(vals[0], vals[1], vals[2], vals[3]);
}

hauv::Simulator build_simulator(const hauv::VehicleConfig& vcfg, const hauv::Environment& env) {
  hauv::VehicleGeometry geom = vcfg.geometry;
  geom.ensure_profile();
  hauv::VehicleModel model(vcfg.active_coefficients(), vcfg.mass);
  return hauv::Simulator(std::move(model), vcfg.thrusters, geom, env, vcfg.sim);
}

int cmd_estimate(const std::string& vehicle_path, const std::string& calibrate_path,
                 const std::string& json_path) {
  const hauv::VehicleConfig vcfg = hauv::load_vehicle_config(vehicle_path);
  hauv::VehicleGeometry geom = vcfg.geometry;
  geom.ensure_profile();
  hauv::CoefficientSet estimated = hauv::estimate_all(geom, vcfg.mass.rho, vcfg.hydro);

  if (!calibrate_path.empty()) {
    std::ifstream is(calibrate_path);
    if (!is) {
      throw hauv::Error(hauv::ErrorCode::ConfigError, "cannot open " + calibrate_path);
    }
    json j = json::parse(is, nullptr, true, true);
    const auto factors =
        hauv::calibration_from_keys(j.get<std::map<std::string, double>>());
    estimated = hauv::apply_calibration(estimated, factors);
  }

  const bool have_reference = [&] {
    for (hauv::Coeff c : hauv::all_coeffs()) {
      if (vcfg.coefficient_overrides.has(c)) return true;
    }
    return false;
  }();
  const hauv::CoefficientReport report =
      hauv::make_report(estimated, have_reference ? &vcfg.coefficient_overrides : nullptr);
  std::cout << report.text();

  if (!json_path.empty()) {
    json rows = json::array();
    for (const auto& row : report.rows) {
      rows.push_back(json{{"coefficient", row.key},
                          {"value", row.value},
                          {"unit", row.unit},
                          {"provenance", row.provenance},
                          {"reference", row.have_reference ? json(row.reference) : json()},
                          {"sign_anomaly", row.sign_anomaly}});
    }
    std::ofstream os(json_path);
    if (!os) throw hauv::Error(hauv::ErrorCode::ConfigError, "cannot write " + json_path);
    os << rows.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_plan(const std::string& mission_path, bool print_overlap) {
  const hauv::MissionConfig mcfg = hauv::load_mission_config(mission_path);
  const hauv::MissionPlan plan = mcfg.plan();
  std::cout << hauv::serialize(plan);
  if (print_overlap) {
    const hauv::OverlapReport rep = hauv::overlap_report(mcfg.footprint, plan);
    std::cerr << "along-track overlap " << rep.along_track * 100.0 << "%"
              << (rep.along_gap ? " (GAP)" : "") << ", cross-track overlap "
              << rep.cross_track * 100.0 << "%" << (rep.cross_gap ? " (GAP)" : "")
              << ", planned frame rate " << plan.camera.frame_rate << " fps\n";
  }
  return kExitOk;
}

int cmd_simulate(const std::string& vehicle_path, const std::string& mission_path,
                 const std::string& controller, const std::string& current_text,
                 unsigned long seed, const std::string& out_dir) {
  const hauv::VehicleConfig vcfg = hauv::load_vehicle_config(vehicle_path);
  hauv::MissionConfig mcfg = hauv::load_mission_config(mission_path);
  if (!current_text.empty()) mcfg.environment.current = parse_vec3(current_text);
  mcfg.environment.validate();

  hauv::RunOptions run;
  if (controller == "original") {
    run.controller = hauv::ControllerVariant::original;
  } else if (controller == "modified") {
    run.controller = hauv::ControllerVariant::modified;
  } else {
    throw hauv::Error(hauv::ErrorCode::ConfigError,
                      "--controller must be 'original' or 'modified'");
  }
  (void)seed;  // runs are deterministic; the seed is kept for sweep tooling

  const hauv::MissionPlan plan = mcfg.plan();
  const hauv::Simulator sim = build_simulator(vcfg, mcfg.environment);
  hauv::MissionResult result = hauv::run_mission(plan, sim, vcfg.guidance, vcfg.gains,
                                                 vcfg.allocation_template(), vcfg.schedule, run);
  if (result.timed_out) {
    std::cerr << "warning: mission timed out; metrics cover the partial run\n";
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    result.log.write_csv_file((fs::path(out_dir) / "trajectory.csv").string());
    result.commands.write_csv_file((fs::path(out_dir) / "commands.csv").string());
    std::ofstream os(fs::path(out_dir) / "metrics.json");
    os << result.metrics.to_json();
  }
  std::cout << result.metrics.to_json();
  return kExitOk;
}

int cmd_replay(const std::string& vehicle_path, const std::string& rpm_path,
               const std::string& compare_path, const std::string& out_dir) {
  const hauv::VehicleConfig vcfg = hauv::load_vehicle_config(vehicle_path);
  const hauv::RpmLog commands = hauv::RpmLog::read_csv_file(rpm_path);
  hauv::Environment env;  // calm water; sea-trial currents are not recorded
  env.rho = vcfg.mass.rho;
  const hauv::Simulator sim = build_simulator(vcfg, env);

  hauv::SimState initial;
  if (!compare_path.empty()) {
    // Hybrid-style rerun: start the model from the measured initial state.
    const auto measured_head = hauv::TrajectoryLog::read_csv_file(compare_path);
    if (!measured_head.records.empty()) {
      initial.pose = measured_head.records.front().pose;
      initial.nu = measured_head.records.front().nu;
      initial.t = measured_head.records.front().t;
    }
  }
  const hauv::TrajectoryLog log = hauv::replay(commands, sim, initial);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    log.write_csv_file((fs::path(out_dir) / "replay.csv").string());
  }
  if (!compare_path.empty()) {
    const hauv::TrajectoryLog measured = hauv::TrajectoryLog::read_csv_file(compare_path);
    const hauv::CompareReport report = hauv::compare(log, measured);
    std::cout << report.text();
    if (!out_dir.empty()) {
      std::ofstream os(fs::path(out_dir) / "compare.json");
      os << report.to_json();
    }
  } else if (out_dir.empty()) {
    log.write_csv(std::cout);
  }
  return kExitOk;
}

int cmd_allocate(const std::string& vehicle_path, const std::string& tau_text, double speed) {
  const hauv::VehicleConfig vcfg = hauv::load_vehicle_config(vehicle_path);
  hauv::AllocationProblem problem = vcfg.allocation_template();
  problem.tau = parse_vec4(tau_text);
  problem.weights = hauv::weight_schedule(speed, vcfg.schedule);

  hauv::AllocationTrace trace;
  const hauv::AllocationResult res = hauv::allocate(problem, &trace);

  std::cout << "demand tau = [" << problem.tau.transpose() << "]  (rows X, Y, Z, N)\n"
            << "weights    = [" << problem.weights.transpose() << "]\n";
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& s = trace.steps[k];
    std::cout << "--- iteration " << k << " ---\n"
              << "B =\n" << s.B << "\n"
              << "c = [" << s.c.transpose() << "]\n"
              << "f = [" << s.f.transpose() << "]\n";
  }
  std::cout << "result f   = [" << res.f.transpose() << "]\n"
            << "saturated  = [";
  for (int i = 0; i < 5; ++i) std::cout << (res.saturated[i] ? 1 : 0) << (i < 4 ? " " : "");
  std::cout << "]\nresidual   = " << res.residual << "\n"
            << "iterations = " << res.iterations << "\n"
            << "infeasible = " << (res.infeasible ? "yes" : "no") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hovering-AUV dynamics, allocation and survey-mission toolkit"};
  app.require_subcommand(1);

  std::string vehicle_path, mission_path, calibrate_path, json_path;
  std::string controller = "modified", current_text, out_dir, rpm_path, compare_path, tau_text;
  unsigned long seed = 0;
  double speed = 0.0;
  bool print_overlap = false;

  auto* est = app.add_subcommand("estimate-coeffs", "Estimate hydrodynamic coefficients");
  est->add_option("vehicle", vehicle_path, "vehicle config file")->required();
  est->add_option("--calibrate", calibrate_path, "JSON map of calibration factors");
  est->add_option("--json", json_path, "write the machine-readable table here");

  auto* plan = app.add_subcommand("plan", "Emit the lawnmower mission plan as JSON");
  plan->add_option("mission", mission_path, "mission config file")->required();
  plan->add_flag("--overlap", print_overlap, "print the image-overlap report to stderr");

  auto* simc = app.add_subcommand("simulate", "Run a closed-loop survey mission");
  simc->add_option("vehicle", vehicle_path, "vehicle config file")->required();
  simc->add_option("mission", mission_path, "mission config file")->required();
  simc->add_option("--controller", controller, "original|modified")
      ->check(CLI::IsMember({"original", "modified"}));
  simc->add_option("--current", current_text, "Earth-frame current N,E,D [m/s]");
  simc->add_option("--seed", seed, "run seed (reserved for sweeps; runs are deterministic)");
  simc->add_option("--out", out_dir, "output directory for trajectory/commands/metrics");

  auto* rep = app.add_subcommand("replay", "Re-run a recorded thruster command log");
  rep->add_option("vehicle", vehicle_path, "vehicle config file")->required();
  rep->add_option("rpm", rpm_path, "command CSV (t,n1..n5)")->required();
  rep->add_option("--compare", compare_path, "measured trajectory CSV to compare against");
  rep->add_option("--out", out_dir, "output directory");

  auto* alloc = app.add_subcommand("allocate", "Print the allocation trace for a demand");
  alloc->add_option("vehicle", vehicle_path, "vehicle config file")->required();
  alloc->add_option("--tau", tau_text, "demand X,Y,Z,N")->required();
  alloc->add_option("--speed", speed, "surge speed for the weight schedule [m/s]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (est->parsed()) return cmd_estimate(vehicle_path, calibrate_path, json_path);
    if (plan->parsed()) return cmd_plan(mission_path, print_overlap);
    if (simc->parsed()) {
      return cmd_simulate(vehicle_path, mission_path, controller, current_text, seed, out_dir);
    }
    if (rep->parsed()) return cmd_replay(vehicle_path, rpm_path, compare_path, out_dir);
    if (alloc->parsed()) return cmd_allocate(vehicle_path, tau_text, speed);
  } catch (const hauv::Error& e) {
    std::cerr << "error [" << hauv::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == hauv::ErrorCode::ConfigError ? kExitConfig : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
