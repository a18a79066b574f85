#include "hauv/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hauv/errors.hpp"

namespace hauv {

namespace {

using nlohmann::json;

json vec_to_json(const Vec2& v) { return json::array({v.x(), v.y()}); }
json vec_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }
json vec_to_json(const Vec5& v) { return json::array({v[0], v[1], v[2], v[3], v[4]}); }

Vec2 vec2_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ConfigError, "expected [n, e]");
  return Vec2(j[0].get<double>(), j[1].get<double>());
}
Vec3 vec3_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ConfigError, "expected 3-vector");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}
Vec5 vec5_from(const json& j) {
  if (!j.is_array() || j.size() != 5) throw Error(ErrorCode::ConfigError, "expected 5-vector");
  Vec5 v;
  for (int i = 0; i < 5; ++i) v[i] = j[i].get<double>();
  return v;
}

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

json to_json(const PidGains& g) {
  return json{{"kp", g.kp},          {"ki", g.ki},
              {"kd", g.kd},          {"integ_limit", g.integ_limit},
              {"out_limit", g.out_limit}, {"integ_gate", g.integ_gate}};
}

PidGains pid_from(const json& j, const PidGains& defaults) {
  PidGains g = defaults;
  maybe(j, "kp", g.kp);
  maybe(j, "ki", g.ki);
  maybe(j, "kd", g.kd);
  maybe(j, "integ_limit", g.integ_limit);
  maybe(j, "out_limit", g.out_limit);
  maybe(j, "integ_gate", g.integ_gate);
  return g;
}

json to_json(const VehicleGeometry& g) {
  json j{{"hull_length", g.hull_length},
         {"hull_diameter", g.hull_diameter},
         {"thruster_length", g.thruster_length},
         {"thruster_diameter", g.thruster_diameter},
         {"mast_width", g.mast_width},
         {"mast_height", g.mast_height},
         {"mast_chord", g.mast_chord},
         {"mast_station", g.mast_station},
         {"station_nose", g.station_nose},
         {"station_mount_fwd", g.station_mount_fwd},
         {"station_mount_aft", g.station_mount_aft},
         {"station_tail", g.station_tail},
         {"cb_from_nose", g.cb_from_nose},
         {"mount_span", g.mount_span},
         {"lateral_arm", g.lateral_arm},
         {"x_th4", g.x_th4},
         {"x_th5", g.x_th5},
         {"tunnel_area", g.tunnel_area}};
  if (!g.profile.empty()) {
    json knots = json::array();
    for (const auto& [s, r] : g.profile.knots()) knots.push_back(json::array({s, r}));
    j["profile"] = knots;
  }
  return j;
}

VehicleGeometry geometry_from(const json& j) {
  VehicleGeometry g;
  maybe(j, "hull_length", g.hull_length);
  maybe(j, "hull_diameter", g.hull_diameter);
  maybe(j, "thruster_length", g.thruster_length);
  maybe(j, "thruster_diameter", g.thruster_diameter);
  maybe(j, "mast_width", g.mast_width);
  maybe(j, "mast_height", g.mast_height);
  maybe(j, "mast_chord", g.mast_chord);
  maybe(j, "mast_station", g.mast_station);
  maybe(j, "station_nose", g.station_nose);
  maybe(j, "station_mount_fwd", g.station_mount_fwd);
  maybe(j, "station_mount_aft", g.station_mount_aft);
  maybe(j, "station_tail", g.station_tail);
  maybe(j, "cb_from_nose", g.cb_from_nose);
  maybe(j, "mount_span", g.mount_span);
  maybe(j, "lateral_arm", g.lateral_arm);
  maybe(j, "x_th4", g.x_th4);
  maybe(j, "x_th5", g.x_th5);
  maybe(j, "tunnel_area", g.tunnel_area);
  if (j.contains("profile")) {
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j.at("profile")) {
      knots.emplace_back(k[0].get<double>(), k[1].get<double>());
    }
    g.profile = HullProfile(std::move(knots));
  }
  return g;
}

json to_json(const MassProperties& m) {
  return json{{"mass", m.mass},
              {"inertia", json::array({m.inertia(0, 0), m.inertia(1, 1), m.inertia(2, 2),
                                       m.inertia(0, 1), m.inertia(0, 2), m.inertia(1, 2)})},
              {"r_g", vec_to_json(m.r_g)},
              {"r_b", vec_to_json(m.r_b)},
              {"weight", m.weight},
              {"buoyancy", m.buoyancy},
              {"displaced_volume", m.displaced_volume},
              {"rho", m.rho}};
}

MassProperties mass_from(const json& j) {
  MassProperties m;
  maybe(j, "mass", m.mass);
  if (j.contains("inertia")) {
    const auto& a = j.at("inertia");
    if (a.size() == 3) {
      m.inertia = Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>()).asDiagonal();
    } else if (a.size() == 6) {
      // [Ixx, Iyy, Izz, Ixy, Ixz, Iyz]
      m.inertia << a[0].get<double>(), a[3].get<double>(), a[4].get<double>(),
          a[3].get<double>(), a[1].get<double>(), a[5].get<double>(),
          a[4].get<double>(), a[5].get<double>(), a[2].get<double>();
    } else {
      throw Error(ErrorCode::ConfigError, "inertia must have 3 or 6 entries");
    }
  }
  if (j.contains("r_g")) m.r_g = vec3_from(j.at("r_g"));
  if (j.contains("r_b")) m.r_b = vec3_from(j.at("r_b"));
  maybe(j, "weight", m.weight);
  maybe(j, "buoyancy", m.buoyancy);
  maybe(j, "displaced_volume", m.displaced_volume);
  maybe(j, "rho", m.rho);
  return m;
}

json to_json(const ThrusterSpec& t) {
  json j{{"id", t.id},
         {"kind", t.kind == ThrusterKind::tunnel ? "tunnel" : "open-propeller"},
         {"diameter", t.diameter},
         {"kt", t.kt},
         {"kq", t.kq},
         {"n_max", t.n_max},
         {"wake_fraction", t.wake_fraction},
         {"thrust_deduction", t.thrust_deduction},
         {"jet_deduction", t.jet_deduction},
         {"tunnel_area", t.tunnel_area},
         {"position", vec_to_json(t.position)},
         {"direction", vec_to_json(t.direction)},
         {"spin", t.spin},
         {"bollard_factor", t.bollard_factor},
         {"astern_efficiency", t.astern_efficiency}};
  if (!t.kt_table.empty()) {
    json table = json::array();
    for (const auto& [jj, kt] : t.kt_table) table.push_back(json::array({jj, kt}));
    j["kt_table"] = table;
  }
  return j;
}

ThrusterSpec thruster_from(const json& j) {
  ThrusterSpec t;
  maybe(j, "id", t.id);
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tunnel") {
      t.kind = ThrusterKind::tunnel;
    } else if (kind == "open-propeller") {
      t.kind = ThrusterKind::open_propeller;
    } else {
      throw Error(ErrorCode::ConfigError, "unknown thruster kind '" + kind + "'");
    }
  }
  maybe(j, "diameter", t.diameter);
  maybe(j, "kt", t.kt);
  maybe(j, "kq", t.kq);
  maybe(j, "n_max", t.n_max);
  maybe(j, "wake_fraction", t.wake_fraction);
  maybe(j, "thrust_deduction", t.thrust_deduction);
  maybe(j, "jet_deduction", t.jet_deduction);
  maybe(j, "tunnel_area", t.tunnel_area);
  if (j.contains("position")) t.position = vec3_from(j.at("position"));
  if (j.contains("direction")) t.direction = vec3_from(j.at("direction"));
  maybe(j, "spin", t.spin);
  maybe(j, "bollard_factor", t.bollard_factor);
  maybe(j, "astern_efficiency", t.astern_efficiency);
  if (j.contains("kt_table")) {
    for (const auto& row : j.at("kt_table")) {
      t.kt_table.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
  }
  return t;
}

json to_json(const CoefficientSet& c) {
  json j = json::object();
  for (Coeff coeff : all_coeffs()) {
    if (!c.has(coeff)) continue;
    j[coeff_key(coeff)] =
        json{{"value", c.require(coeff)}, {"provenance", to_string(c.provenance(coeff))}};
  }
  return j;
}

CoefficientSet coefficients_from(const json& j) {
  CoefficientSet c;
  for (const auto& [key, val] : j.items()) {
    const Coeff coeff = coeff_from_key(key);
    if (val.is_number()) {
      c.set(coeff, val.get<double>(), Provenance::analytic);
    } else {
      c.set(coeff, val.at("value").get<double>(),
            provenance_from_string(val.value("provenance", "analytic")));
    }
  }
  return c;
}

json to_json(const EstimatorOptions& o) {
  return json{{"strips", o.strips},
              {"reference_speed", o.reference_speed},
              {"kinematic_viscosity", o.kinematic_viscosity},
              {"mast_axial_cd", o.mast_axial_cd},
              {"mount_axial_xuu", o.mount_axial_xuu},
              {"tunnel_opening_xuu", o.tunnel_opening_xuu},
              {"lift_moment_sign", o.lift_moment_sign}};
}

EstimatorOptions hydro_from(const json& j) {
  EstimatorOptions o;
  maybe(j, "strips", o.strips);
  maybe(j, "reference_speed", o.reference_speed);
  maybe(j, "kinematic_viscosity", o.kinematic_viscosity);
  maybe(j, "mast_axial_cd", o.mast_axial_cd);
  maybe(j, "mount_axial_xuu", o.mount_axial_xuu);
  maybe(j, "tunnel_opening_xuu", o.tunnel_opening_xuu);
  maybe(j, "lift_moment_sign", o.lift_moment_sign);
  return o;
}

json to_json(const GuidanceConfig& g) {
  return json{{"look_ahead", g.look_ahead},
              {"e_on", g.e_on},
              {"e_off", g.e_off},
              {"v_max", g.v_max},
              {"accel_filter_tau", g.accel_filter_tau},
              {"sway_augmented", g.sway_augmented},
              {"slow_in_turns", g.slow_in_turns},
              {"sway", to_json(g.sway)}};
}

GuidanceConfig guidance_from(const json& j, const GuidanceConfig& defaults) {
  GuidanceConfig g = defaults;
  maybe(j, "look_ahead", g.look_ahead);
  maybe(j, "e_on", g.e_on);
  maybe(j, "e_off", g.e_off);
  maybe(j, "v_max", g.v_max);
  maybe(j, "accel_filter_tau", g.accel_filter_tau);
  maybe(j, "sway_augmented", g.sway_augmented);
  maybe(j, "slow_in_turns", g.slow_in_turns);
  if (j.contains("sway")) g.sway = pid_from(j.at("sway"), defaults.sway);
  return g;
}

json to_json(const WeightScheduleParams& w) {
  return json{{"u_lo", w.u_lo},
              {"u_hi", w.u_hi},
              {"lateral_low", w.lateral_low},
              {"lateral_high", w.lateral_high},
              {"horizontal_low", w.horizontal_low},
              {"horizontal_high", w.horizontal_high},
              {"vertical", w.vertical}};
}

WeightScheduleParams schedule_from(const json& j) {
  WeightScheduleParams w;
  maybe(j, "u_lo", w.u_lo);
  maybe(j, "u_hi", w.u_hi);
  maybe(j, "lateral_low", w.lateral_low);
  maybe(j, "lateral_high", w.lateral_high);
  maybe(j, "horizontal_low", w.horizontal_low);
  maybe(j, "horizontal_high", w.horizontal_high);
  maybe(j, "vertical", w.vertical);
  return w;
}

json to_json(const SimOptions& s) {
  return json{{"dt", s.dt},
              {"command_lag", s.command_lag},
              {"torque_roll_model", s.torque_roll_model},
              {"jet_drag_cd", s.jet_drag_cd},
              {"blowup_limit", s.blowup_limit},
              {"log_decimation", s.log_decimation}};
}

SimOptions sim_from(const json& j) {
  SimOptions s;
  maybe(j, "dt", s.dt);
  maybe(j, "command_lag", s.command_lag);
  maybe(j, "torque_roll_model", s.torque_roll_model);
  maybe(j, "jet_drag_cd", s.jet_drag_cd);
  maybe(j, "blowup_limit", s.blowup_limit);
  maybe(j, "log_decimation", s.log_decimation);
  return s;
}

json to_json(const Environment& e) {
  json j{{"current", vec_to_json(e.current)},
         {"rho", e.rho},
         {"seabed_depth", e.seabed_depth}};
  if (e.seabed_grid) {
    j["seabed_grid"] = json{{"origin", vec_to_json(e.seabed_grid->origin)},
                            {"spacing", e.seabed_grid->spacing},
                            {"rows", e.seabed_grid->rows},
                            {"cols", e.seabed_grid->cols},
                            {"depths", e.seabed_grid->depths}};
  }
  return j;
}

Environment environment_from(const json& j) {
  Environment e;
  if (j.contains("current")) e.current = vec3_from(j.at("current"));
  maybe(j, "rho", e.rho);
  maybe(j, "seabed_depth", e.seabed_depth);
  if (j.contains("seabed_grid")) {
    const auto& g = j.at("seabed_grid");
    SeabedGrid grid;
    grid.origin = vec2_from(g.at("origin"));
    grid.spacing = g.at("spacing").get<double>();
    grid.rows = g.at("rows").get<int>();
    grid.cols = g.at("cols").get<int>();
    grid.depths = g.at("depths").get<std::vector<double>>();
    e.seabed_grid = grid;
  }
  return e;
}

json to_json(const CameraSettings& c) {
  return json{{"frame_rate", c.frame_rate},
              {"max_fps", c.max_fps},
              {"exposure_ms", c.exposure_ms},
              {"aperture", c.aperture},
              {"focus_distance_m", c.focus_distance_m},
              {"overlap_target", c.overlap_target}};
}

CameraSettings camera_from(const json& j) {
  CameraSettings c;
  maybe(j, "frame_rate", c.frame_rate);
  maybe(j, "max_fps", c.max_fps);
  maybe(j, "exposure_ms", c.exposure_ms);
  maybe(j, "aperture", c.aperture);
  maybe(j, "focus_distance_m", c.focus_distance_m);
  maybe(j, "overlap_target", c.overlap_target);
  return c;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ConfigError, std::string("config parse failure: ") + ex.what());
  }
}

}  // namespace

CoefficientSet VehicleConfig::active_coefficients() const {
  VehicleGeometry g = geometry;
  g.ensure_profile();
  CoefficientSet active = estimate_all(g, mass.rho, hydro);
  for (Coeff c : all_coeffs()) {
    if (coefficient_overrides.has(c)) {
      const auto e = coefficient_overrides.entry(c);
      active.set(c, e->value, e->provenance);
    }
  }
  return apply_calibration(active, calibration);
}

AllocationProblem VehicleConfig::allocation_template() const {
  AllocationProblem p;
  VehicleGeometry g = geometry;
  g.ensure_profile();
  p.B0 = controllable_config_matrix(config_matrix(g));
  p.f_min = f_min;
  p.f_max = f_max;
  p.epsilon = allocation_epsilon;
  return p;
}

MissionPlan MissionConfig::plan() const {
  MissionPlan p = plan_lawnmower(region, spacing, vertical, speed, vertical_mode);
  p.camera = camera;
  p.camera.frame_rate = frame_rate(speed, vertical, camera.overlap_target, camera.max_fps).fps;
  return p;
}

VehicleConfig parse_vehicle_config(const std::string& text) {
  const json j = parse_text(text);
  try {
    VehicleConfig cfg = default_vehicle_config();
    if (j.contains("geometry")) cfg.geometry = geometry_from(j.at("geometry"));
    if (j.contains("mass")) cfg.mass = mass_from(j.at("mass"));
    if (j.contains("thrusters")) {
      cfg.thrusters.clear();
      for (const auto& t : j.at("thrusters")) cfg.thrusters.push_back(thruster_from(t));
    }
    if (j.contains("coefficients")) {
      cfg.coefficient_overrides = coefficients_from(j.at("coefficients"));
    }
    if (j.contains("calibration")) {
      cfg.calibration =
          calibration_from_keys(j.at("calibration").get<std::map<std::string, double>>());
    }
    if (j.contains("hydro")) cfg.hydro = hydro_from(j.at("hydro"));
    if (j.contains("guidance")) cfg.guidance = guidance_from(j.at("guidance"), cfg.guidance);
    if (j.contains("gains")) {
      const auto& g = j.at("gains");
      if (g.contains("heading")) cfg.gains.heading = pid_from(g.at("heading"), cfg.gains.heading);
      if (g.contains("surge")) cfg.gains.surge = pid_from(g.at("surge"), cfg.gains.surge);
      if (g.contains("sway_vel")) {
        cfg.gains.sway_vel = pid_from(g.at("sway_vel"), cfg.gains.sway_vel);
      }
      if (g.contains("depth")) cfg.gains.depth = pid_from(g.at("depth"), cfg.gains.depth);
    }
    if (j.contains("allocation")) {
      const auto& a = j.at("allocation");
      maybe(a, "epsilon", cfg.allocation_epsilon);
      if (a.contains("f_min")) cfg.f_min = vec5_from(a.at("f_min"));
      if (a.contains("f_max")) cfg.f_max = vec5_from(a.at("f_max"));
      if (a.contains("schedule")) cfg.schedule = schedule_from(a.at("schedule"));
    }
    if (j.contains("simulation")) cfg.sim = sim_from(j.at("simulation"));
    cfg.geometry.ensure_profile();
    cfg.geometry.validate();
    cfg.mass.validate();
    return cfg;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ConfigError, std::string("vehicle config: ") + ex.what());
  }
}

MissionConfig parse_mission_config(const std::string& text) {
  const json j = parse_text(text);
  try {
    MissionConfig cfg = default_mission_config();
    if (j.contains("region")) {
      const auto& r = j.at("region");
      if (r.contains("origin")) cfg.region.origin = vec2_from(r.at("origin"));
      maybe(r, "length", cfg.region.length);
      maybe(r, "width", cfg.region.width);
      if (r.contains("rotation_rad")) {
        cfg.region.rotation = r.at("rotation_rad").get<double>();
      } else if (r.contains("rotation_deg")) {
        cfg.region.rotation = r.at("rotation_deg").get<double>() * M_PI / 180.0;
      }
    }
    maybe(j, "spacing", cfg.spacing);
    maybe(j, "speed", cfg.speed);
    if (j.contains("vertical_mode")) {
      const std::string mode = j.at("vertical_mode").get<std::string>();
      if (mode == "altitude") {
        cfg.vertical_mode = VerticalMode::altitude;
      } else if (mode == "depth") {
        cfg.vertical_mode = VerticalMode::depth;
      } else {
        throw Error(ErrorCode::ConfigError, "vertical_mode must be 'altitude' or 'depth'");
      }
    }
    maybe(j, "vertical", cfg.vertical);
    if (j.contains("camera")) cfg.camera = camera_from(j.at("camera"));
    if (j.contains("footprint")) {
      const auto& f = j.at("footprint");
      maybe(f, "along_track", cfg.footprint.along_track);
      maybe(f, "cross_track", cfg.footprint.cross_track);
      maybe(f, "pixel_resolution_mm", cfg.footprint.pixel_resolution_mm);
    }
    if (j.contains("environment")) cfg.environment = environment_from(j.at("environment"));
    cfg.environment.validate();
    return cfg;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ConfigError, std::string("mission config: ") + ex.what());
  }
}

VehicleConfig load_vehicle_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ConfigError, "cannot open vehicle config " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_vehicle_config(ss.str());
}

MissionConfig load_mission_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ConfigError, "cannot open mission config " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_mission_config(ss.str());
}

std::string serialize(const VehicleConfig& cfg) {
  json gains{{"heading", to_json(cfg.gains.heading)},
             {"surge", to_json(cfg.gains.surge)},
             {"sway_vel", to_json(cfg.gains.sway_vel)},
             {"depth", to_json(cfg.gains.depth)}};
  json thrusters = json::array();
  for (const auto& t : cfg.thrusters) thrusters.push_back(to_json(t));
  json calibration = json::object();
  for (const auto& [c, factor] : cfg.calibration) calibration[coeff_key(c)] = factor;
  json j{{"geometry", to_json(cfg.geometry)},
         {"mass", to_json(cfg.mass)},
         {"thrusters", thrusters},
         {"coefficients", to_json(cfg.coefficient_overrides)},
         {"calibration", calibration},
         {"hydro", to_json(cfg.hydro)},
         {"guidance", to_json(cfg.guidance)},
         {"gains", gains},
         {"allocation", json{{"epsilon", cfg.allocation_epsilon},
                             {"f_min", vec_to_json(cfg.f_min)},
                             {"f_max", vec_to_json(cfg.f_max)},
                             {"schedule", to_json(cfg.schedule)}}},
         {"simulation", to_json(cfg.sim)}};
  return j.dump(2) + "\n";
}

std::string serialize(const MissionConfig& cfg) {
  json j{{"region", json{{"origin", vec_to_json(cfg.region.origin)},
                         {"length", cfg.region.length},
                         {"width", cfg.region.width},
                         {"rotation_rad", cfg.region.rotation}}},
         {"spacing", cfg.spacing},
         {"speed", cfg.speed},
         {"vertical_mode", cfg.vertical_mode == VerticalMode::altitude ? "altitude" : "depth"},
         {"vertical", cfg.vertical},
         {"camera", to_json(cfg.camera)},
         {"footprint", json{{"along_track", cfg.footprint.along_track},
                            {"cross_track", cfg.footprint.cross_track},
                            {"pixel_resolution_mm", cfg.footprint.pixel_resolution_mm}}},
         {"environment", to_json(cfg.environment)}};
  return j.dump(2) + "\n";
}

std::string serialize(const MissionPlan& plan) {
  json waypoints = json::array();
  for (const auto& wp : plan.waypoints) {
    waypoints.push_back(json{{"ne", vec_to_json(wp.ne)}, {"vertical", wp.vertical}});
  }
  json j{{"waypoints", waypoints},
         {"vertical_mode", plan.vertical_mode == VerticalMode::altitude ? "altitude" : "depth"},
         {"vertical", plan.vertical},
         {"speed", plan.speed},
         {"spacing", plan.spacing},
         {"camera", to_json(plan.camera)},
         {"path_length_m", plan.path_length()}};
  return j.dump(2) + "\n";
}

MissionPlan parse_mission_plan(const std::string& text) {
  const json j = parse_text(text);
  try {
    MissionPlan plan;
    for (const auto& wp : j.at("waypoints")) {
      plan.waypoints.push_back({vec2_from(wp.at("ne")), wp.at("vertical").get<double>()});
    }
    plan.vertical_mode = j.value("vertical_mode", std::string("altitude")) == "depth"
                             ? VerticalMode::depth
                             : VerticalMode::altitude;
    maybe(j, "vertical", plan.vertical);
    maybe(j, "speed", plan.speed);
    maybe(j, "spacing", plan.spacing);
    if (j.contains("camera")) plan.camera = camera_from(j.at("camera"));
    plan.validate();
    return plan;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ConfigError, std::string("mission plan: ") + ex.what());
  }
}

VehicleConfig default_vehicle_config() {
  VehicleConfig cfg;
  cfg.geometry = VehicleGeometry{};
  cfg.geometry.ensure_profile();

  cfg.mass.mass = 52.0;
  cfg.mass.inertia = Vec3(0.6, 11.0, 11.0).asDiagonal();
  cfg.mass.r_g = Vec3(0.0, 0.0, 0.02);
  cfg.mass.r_b = Vec3::Zero();
  cfg.mass.weight = 52.0 * 9.81;
  cfg.mass.buoyancy = 52.0 * 9.81;
  cfg.mass.displaced_volume = 52.0 / 1025.0;
  cfg.mass.rho = 1025.0;

  auto open = [](const std::string& id, double y, double spin) {
    ThrusterSpec t;
    t.id = id;
    t.kind = ThrusterKind::open_propeller;
    t.diameter = 0.076;
    t.kt = 0.35;
    t.kq = 0.028;
    t.n_max = 55.0;
    t.wake_fraction = 0.10;
    t.thrust_deduction = 0.08;
    t.position = Vec3(-0.574, y, 0.0);
    t.direction = Vec3::UnitX();
    t.spin = spin;
    return t;
  };
  auto tunnel = [](const std::string& id, const Vec3& pos, const Vec3& dir) {
    ThrusterSpec t;
    t.id = id;
    t.kind = ThrusterKind::tunnel;
    t.diameter = 0.076;
    t.kt = 0.35;
    t.kq = 0.028;
    t.n_max = 55.0;
    t.jet_deduction = 1.5;
    t.tunnel_area = 0.0045;
    t.position = pos;
    t.direction = dir;
    t.spin = 0.0;
    return t;
  };
  cfg.thrusters = {
      open("horizontal_1", 0.195, 1.0),
      open("horizontal_2", -0.195, -1.0),
      tunnel("vertical", Vec3(0.0, 0.0, 0.0), Vec3::UnitZ()),
      tunnel("lateral_nose", Vec3(0.60, 0.0, 0.0), Vec3::UnitY()),
      tunnel("lateral_tail", Vec3(-0.70, 0.0, 0.0), Vec3::UnitY()),
  };

  // Stock-model coefficient table: added mass from the component build-up,
  // damping and lift from the flow solution of the full hull where available.
  auto set = [&](Coeff c, double v, Provenance p) { cfg.coefficient_overrides.set(c, v, p); };
  set(Coeff::Xudot, -2.806, Provenance::analytic);
  set(Coeff::Yvdot, -78.459, Provenance::analytic);
  set(Coeff::Yrdot, -8.529, Provenance::analytic);
  set(Coeff::Kvdot, 0.216, Provenance::analytic);
  set(Coeff::Kpdot, -0.042, Provenance::analytic);
  set(Coeff::Npdot, -0.102, Provenance::analytic);
  set(Coeff::Zwdot, -69.536, Provenance::analytic);
  set(Coeff::Mudot, 0.0321, Provenance::analytic);
  set(Coeff::Nvdot, -8.529, Provenance::analytic);
  set(Coeff::Mwdot, -11.253, Provenance::analytic);
  set(Coeff::Mqdot, -20.963, Provenance::analytic);
  set(Coeff::Nrdot, -22.537, Provenance::analytic);
  set(Coeff::Xuu, -8.375, Provenance::cfd);
  set(Coeff::Yvv, -146.95, Provenance::cfd);
  set(Coeff::Zww, -174.525, Provenance::cfd);
  set(Coeff::Kpp, -0.287, Provenance::cfd);
  set(Coeff::Kvv, -6.5, Provenance::cfd);
  set(Coeff::Krr, 0.558, Provenance::cfd);
  set(Coeff::Mww, 11.4, Provenance::cfd);
  set(Coeff::Mqq, -34.551, Provenance::cfd);
  set(Coeff::Muu, 0.9, Provenance::cfd);
  set(Coeff::Nvv, -12.675, Provenance::cfd);
  set(Coeff::Nrr, -26.377, Provenance::cfd);
  set(Coeff::Yuv, -35.428, Provenance::cfd);
  set(Coeff::Zuw, -35.428, Provenance::cfd);
  set(Coeff::Muw, -3.37, Provenance::cfd);
  set(Coeff::Nuv, 3.37, Provenance::cfd);

  // Sea-trial correction factors.
  auto cal = [&](Coeff c, double f) { cfg.calibration[c] = f; };
  cal(Coeff::Xudot, 10.0);
  cal(Coeff::Yvdot, 0.3);
  cal(Coeff::Yrdot, 0.3);
  cal(Coeff::Zwdot, 0.4);
  cal(Coeff::Nvdot, 0.3);
  cal(Coeff::Mwdot, 0.5);
  cal(Coeff::Mqdot, 0.5);
  cal(Coeff::Nrdot, 0.5);
  cal(Coeff::Xuu, 1.8);
  cal(Coeff::Yvv, 2.2);
  cal(Coeff::Zww, 1.86);
  cal(Coeff::Mww, 0.008);
  cal(Coeff::Nvv, 0.15);
  cal(Coeff::Nrr, 2.05);

  return cfg;
}

MissionConfig default_mission_config() {
  MissionConfig cfg;
  cfg.region = SurveyRegion{};
  cfg.environment.seabed_depth = 10.0;
  return cfg;
}

}  // namespace hauv
