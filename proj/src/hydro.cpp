#include "hauv/hydro.hpp"

#include <cmath>
#include <sstream>
#include <iomanip>

#include "hauv/errors.hpp"

namespace hauv {

namespace {

constexpr double kPi = M_PI;

// Lamb k-factor for axial acceleration of a prolate spheroid.
double lamb_alpha0(double e) {
  if (e < 1e-4) {
    // Series around the sphere limit, where the closed form is 0/0.
    const double e2 = e * e;
    return 2.0 * (1.0 - e2) * (1.0 / 3.0 + e2 / 5.0 + e2 * e2 / 7.0);
  }
  const double e2 = e * e;
  return 2.0 * (1.0 - e2) / (e2 * e) * (0.5 * std::log((1.0 + e) / (1.0 - e)) - e);
}

}  // namespace

double ellipsoid_axial_added_mass(double l, double d, double rho) {
  if (d > l) {
    throw Error(ErrorCode::InvalidGeometry, "ellipsoid minor axis exceeds major axis");
  }
  if (!(d > 0.0) || !(l > 0.0)) {
    throw Error(ErrorCode::InvalidGeometry, "ellipsoid axes must be > 0");
  }
  const double me = (4.0 / 3.0) * kPi * rho * (l / 2.0) * (d / 2.0) * (d / 2.0);
  const double ratio = d / l;
  const double e = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  const double a0 = lamb_alpha0(e);
  return -a0 / (2.0 - a0) * me;
}

double ittc57_cf(double reynolds) {
  if (reynolds < 1e4) {
    throw Error(ErrorCode::ReynoldsOutOfRange, "Reynolds number below 1e4");
  }
  const double denom = std::log10(reynolds) - 2.0;
  return 0.075 / (denom * denom);
}

double ellipsoid_axial_cd(double l, double d, double cf) {
  const double dl = d / l;
  return 0.44 * dl + 4.0 * cf * (l / d) + 4.0 * cf * std::sqrt(dl);
}

double crossflow_k1(double l_over_d) {
  if (l_over_d > 57.5) return 1.0;
  const double lg = std::log10(l_over_d);
  if (lg <= 0.0) return 0.58;
  return 0.58 + 0.17 * std::pow(lg, 1.6);
}

MastAddedMass mast_added_mass(const VehicleGeometry& g, double rho) {
  MastAddedMass m;
  m.Xudot = -0.25 * kPi * rho * g.mast_width * g.mast_width * g.mast_height;
  m.Mudot = m.Xudot * (g.hull_diameter + g.mast_height) / 2.0;
  m.Yvdot = -0.25 * kPi * rho * g.mast_chord * g.mast_chord * g.mast_height;
  return m;
}

namespace {

// Midpoint-rule strip sums over the hull profile. The vertical plane swaps in
// the reduced finned-section strip -pi rho (r^2 - r^4/b^2) across the
// thruster-mount span, which lightens the section relative to the bare circle.
CrossflowAddedMass strip_added_mass(const VehicleGeometry& g, double rho, int strips) {
  CrossflowAddedMass out;
  const double s0 = g.station_nose;
  const double s1 = g.station_tail;
  const double ds = (s1 - s0) / strips;
  const double b2 = g.mount_span * g.mount_span;
  for (int i = 0; i < strips; ++i) {
    const double s = s0 + (i + 0.5) * ds;
    const double r = g.profile.radius(s);
    const double x = g.body_x(s);
    const double mu_bare = kPi * rho * r * r;
    double mu_vert = mu_bare;
    if (s >= g.station_mount_fwd && s <= g.station_mount_aft) {
      mu_vert = kPi * rho * (r * r - (r * r * r * r) / b2);
    }
    out.Yvdot += -mu_bare * ds;
    out.Nvdot += -mu_bare * x * ds;
    out.Nrdot += -mu_bare * x * x * ds;
    out.Zwdot += -mu_vert * ds;
    out.Mwdot += -mu_vert * x * ds;
    out.Mqdot += -mu_vert * x * x * ds;
  }
  const double r_th = 0.5 * g.thruster_diameter;
  out.Yvdot_thruster = -kPi * rho * r_th * r_th * g.thruster_length;
  out.Zwdot_thruster = out.Yvdot_thruster;
  return out;
}

double rel_change(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-9});
  return std::abs(a - b) / scale;
}

}  // namespace

CrossflowAddedMass crossflow_added_mass(const VehicleGeometry& g, double rho, int strips) {
  const CrossflowAddedMass coarse = strip_added_mass(g, rho, strips);
  const CrossflowAddedMass fine = strip_added_mass(g, rho, 2 * strips);
  const double worst = std::max(
      {rel_change(coarse.Yvdot, fine.Yvdot), rel_change(coarse.Nvdot, fine.Nvdot),
       rel_change(coarse.Nrdot, fine.Nrdot), rel_change(coarse.Zwdot, fine.Zwdot),
       rel_change(coarse.Mwdot, fine.Mwdot), rel_change(coarse.Mqdot, fine.Mqdot)});
  if (worst > 0.005) {
    throw Error(ErrorCode::IntegrationTooCoarse,
                "strip integration not converged: doubling the strip count moves a result by " +
                    std::to_string(worst * 100.0) + "%");
  }
  return fine;
}

AxialDamping axial_damping(const VehicleGeometry& g, double rho, const EstimatorOptions& opt) {
  if (!(opt.reference_speed > 0.0)) {
    throw Error(ErrorCode::InvalidGeometry, "reference speed must be > 0");
  }
  AxialDamping out;

  const double re_hull = opt.reference_speed * g.hull_length / opt.kinematic_viscosity;
  out.cf_hull = ittc57_cf(re_hull);
  const double a_hull = kPi * 0.25 * g.hull_diameter * g.hull_diameter;
  out.hull = -0.5 * rho * a_hull * ellipsoid_axial_cd(g.hull_length, g.hull_diameter, out.cf_hull);

  const double re_th = opt.reference_speed * g.thruster_length / opt.kinematic_viscosity;
  const double cf_th = ittc57_cf(re_th);
  const double a_th = kPi * 0.25 * g.thruster_diameter * g.thruster_diameter;
  out.thrusters =
      2.0 * -0.5 * rho * a_th * ellipsoid_axial_cd(g.thruster_length, g.thruster_diameter, cf_th);

  out.mast = -0.5 * rho * g.mast_width * g.mast_height * opt.mast_axial_cd;
  out.mounts = opt.mount_axial_xuu;
  out.tunnel_openings = opt.tunnel_opening_xuu;
  out.total = out.hull + out.thrusters + out.mast + out.mounts + out.tunnel_openings;
  return out;
}

CrossflowDamping crossflow_damping(const VehicleGeometry& g, double rho, int strips) {
  CrossflowDamping out;
  const double cd_hull = crossflow_cd(g.hull_length / g.hull_diameter);
  const double s0 = g.station_nose;
  const double s1 = g.station_tail;
  const double ds = (s1 - s0) / strips;

  double planform = 0.0, planform_x = 0.0, planform_x3 = 0.0;
  for (int i = 0; i < strips; ++i) {
    const double s = s0 + (i + 0.5) * ds;
    const double width = 2.0 * g.profile.radius(s);
    const double x = g.body_x(s);
    planform += width * ds;
    planform_x += width * x * ds;
    planform_x3 += width * std::abs(x) * x * x * ds;
  }
  const double half_rho_cd = 0.5 * rho * cd_hull;
  // Hull strips: drag force per station, moments by the cross-product arms.
  out.Yvv = -half_rho_cd * planform;
  out.Zww = -half_rho_cd * planform;
  out.Nvv = -half_rho_cd * planform_x;
  out.Mww = +half_rho_cd * planform_x;
  out.Nrr = -half_rho_cd * planform_x3;
  out.Mqq = -half_rho_cd * planform_x3;

  // Thruster bodies, cylinders in cross flow.
  const double cd_th = crossflow_cd(g.thruster_length / g.thruster_diameter);
  const double pod = -0.5 * rho * cd_th * g.thruster_diameter * g.thruster_length;
  out.Yvv += 2.0 * pod;
  out.Zww += 2.0 * pod;

  // Mast as a short plate above the hull. Its side force picks up roll arms
  // from the height band [z_top, z_bot] (z down, so the band is negative) and
  // yaw arms from its station.
  const double cd_mast = crossflow_cd(g.mast_height / g.mast_chord);
  const double mast_force = -0.5 * rho * cd_mast * g.mast_chord * g.mast_height;
  const double per_height = mast_force / g.mast_height;  // [kg/m^2]
  const double x_m = g.body_x(g.mast_station);
  const double z_top = -(0.5 * g.hull_diameter + g.mast_height);
  const double z_bot = -0.5 * g.hull_diameter;
  const double int_z = 0.5 * (z_bot * z_bot - z_top * z_top);  // int z dz < 0
  const double int_abs_z3 =
      0.25 * (std::pow(std::abs(z_top), 4.0) - std::pow(std::abs(z_bot), 4.0));

  out.Yvv += mast_force;
  out.Nvv += x_m * mast_force;
  out.Kvv += -per_height * int_z;
  out.Kpp += per_height * int_abs_z3;
  out.Krr += -per_height * int_z * x_m * std::abs(x_m);
  out.Nrr += mast_force * std::abs(x_m) * std::abs(x_m) * std::abs(x_m);
  return out;
}

BodyLift body_lift(const VehicleGeometry& g, double rho, const EstimatorOptions& opt) {
  BodyLift out;
  if (g.hull_diameter <= 0.0 || g.hull_length <= 0.0) return out;
  const double cl_alpha = 0.003 * (180.0 / kPi) * (g.hull_length / g.hull_diameter);
  const double d2 = g.hull_diameter * g.hull_diameter;
  out.Zuw = -0.5 * rho * d2 * cl_alpha;
  out.Yuv = out.Zuw;
  // Center of pressure sits 0.65 hull lengths behind the nose; in the body
  // frame that is aft of the origin, so the pitch and yaw moments carry
  // opposite signs for the same lever.
  const double x_cp_body = g.body_x(g.station_nose) - 0.65 * g.hull_length;
  out.Muw = opt.lift_moment_sign * (-x_cp_body) * out.Zuw;
  out.Nuv = opt.lift_moment_sign * (+x_cp_body) * out.Yuv;
  out.x_cp = (out.Zuw != 0.0) ? out.Muw / out.Zuw : 0.0;
  return out;
}

CoefficientSet estimate_all(const VehicleGeometry& geom, double rho,
                            const EstimatorOptions& opt) {
  VehicleGeometry g = geom;
  g.ensure_profile();
  g.validate();

  CoefficientSet c;
  const auto tag = Provenance::analytic;

  // Axial added mass: hull + two thruster bodies + mast.
  const double xud_hull = ellipsoid_axial_added_mass(g.hull_length, g.hull_diameter, rho);
  const double xud_th = ellipsoid_axial_added_mass(g.thruster_length, g.thruster_diameter, rho);
  const MastAddedMass mast = mast_added_mass(g, rho);
  c.set(Coeff::Xudot, xud_hull + 2.0 * xud_th + mast.Xudot, tag);
  c.set(Coeff::Mudot, mast.Mudot, tag);

  // Cross-flow added mass by strip theory.
  const CrossflowAddedMass cf = crossflow_added_mass(g, rho, opt.strips);
  c.set(Coeff::Yvdot, cf.Yvdot + 2.0 * cf.Yvdot_thruster + mast.Yvdot, tag);
  c.set(Coeff::Nvdot, cf.Nvdot, tag);
  c.set(Coeff::Yrdot, cf.Nvdot, tag);
  c.set(Coeff::Nrdot, cf.Nrdot, tag);
  c.set(Coeff::Zwdot, cf.Zwdot + 2.0 * cf.Zwdot_thruster, tag);
  c.set(Coeff::Mwdot, cf.Mwdot, tag);
  c.set(Coeff::Mqdot, cf.Mqdot, tag);

  // Mast sway added mass acting above the axis couples into roll and yaw.
  const double z_top = -(0.5 * g.hull_diameter + g.mast_height);
  const double z_bot = -0.5 * g.hull_diameter;
  const double m_per_z = mast.Yvdot / g.mast_height;             // [kg/m], negative
  const double int_z = 0.5 * (z_bot * z_bot - z_top * z_top);    // int z dz, negative band
  const double int_z2 = (z_bot * z_bot * z_bot - z_top * z_top * z_top) / 3.0;
  const double x_m = g.body_x(g.mast_station);
  c.set(Coeff::Kvdot, -m_per_z * int_z, tag);
  c.set(Coeff::Kpdot, m_per_z * int_z2, tag);
  c.set(Coeff::Npdot, -x_m * m_per_z * int_z, tag);

  // Damping.
  const AxialDamping ax = axial_damping(g, rho, opt);
  c.set(Coeff::Xuu, ax.total, tag);
  const CrossflowDamping cd = crossflow_damping(g, rho, opt.strips);
  c.set(Coeff::Yvv, cd.Yvv, tag);
  c.set(Coeff::Zww, cd.Zww, tag);
  c.set(Coeff::Nvv, cd.Nvv, tag);
  c.set(Coeff::Mww, cd.Mww, tag);
  c.set(Coeff::Mqq, cd.Mqq, tag);
  c.set(Coeff::Nrr, cd.Nrr, tag);
  c.set(Coeff::Kvv, cd.Kvv, tag);
  c.set(Coeff::Kpp, cd.Kpp, tag);
  c.set(Coeff::Krr, cd.Krr, tag);
  // Pitch moment of the mast axial drag acting above the axis.
  const double z_mast_centroid = 0.5 * (z_top + z_bot);
  c.set(Coeff::Muu, z_mast_centroid * ax.mast, tag);

  // Body lift.
  const BodyLift lift = body_lift(g, rho, opt);
  c.set(Coeff::Yuv, lift.Yuv, tag);
  c.set(Coeff::Zuw, lift.Zuw, tag);
  c.set(Coeff::Muw, lift.Muw, tag);
  c.set(Coeff::Nuv, lift.Nuv, tag);

  return c;
}

std::string CoefficientReport::text() const {
  std::ostringstream os;
  os << std::left << std::setw(10) << "name" << std::right << std::setw(14) << "value"
     << "  " << std::left << std::setw(15) << "unit" << std::setw(11) << "provenance"
     << std::setw(14) << "reference" << "flags\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(10) << row.display << std::right << std::setw(14)
       << std::setprecision(6) << std::fixed << row.value << "  " << std::left << std::setw(15)
       << row.unit << std::setw(11) << row.provenance;
    if (row.have_reference) {
      std::ostringstream ref;
      ref << std::setprecision(6) << std::fixed << row.reference;
      os << std::setw(14) << ref.str();
    } else {
      os << std::setw(14) << "-";
    }
    if (row.sign_anomaly) os << "SIGN-ANOMALY";
    os << "\n";
  }
  int anomalies = 0;
  for (const auto& row : rows) anomalies += row.sign_anomaly ? 1 : 0;
  if (anomalies > 0) {
    os << anomalies << " coefficient(s) disagree in sign with the reference table;"
       << " values kept as estimated, review before use.\n";
  }
  return os.str();
}

CoefficientReport make_report(const CoefficientSet& estimated, const CoefficientSet* reference) {
  CoefficientReport report;
  for (Coeff c : all_coeffs()) {
    if (!estimated.has(c)) continue;
    ReportRow row;
    row.key = coeff_key(c);
    row.display = coeff_display(c);
    row.value = estimated.require(c);
    row.unit = coeff_unit(c);
    row.provenance = to_string(estimated.provenance(c));
    if (reference != nullptr && reference->has(c)) {
      row.have_reference = true;
      row.reference = reference->require(c);
      row.sign_anomaly = (row.value < 0.0) != (row.reference < 0.0) &&
                         std::abs(row.value) > 1e-12 && std::abs(row.reference) > 1e-12;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hauv
