#pragma once

#include <string>
#include <vector>

#include "hauv/coefficients.hpp"
#include "hauv/geometry.hpp"

namespace hauv {

struct EstimatorOptions {
  int strips = 2000;                   // strip count for the profile integrals
  double reference_speed = 0.2;        // [m/s], sets Re for the friction line
  double kinematic_viscosity = 1.19e-6;// seawater [m^2/s]
  double mast_axial_cd = 0.08;         // edge-on strut drag on frontal w_m*h_m
  double mount_axial_xuu = -0.05;      // additive mount drag [kg/m]
  double tunnel_opening_xuu = -0.15;   // additive tunnel-opening drag [kg/m]
  double lift_moment_sign = 1.0;       // +1 keeps the aft-center-of-pressure moments
};

// Prolate-spheroid axial added mass, negative as stored. Sphere limit
// (l = d) gives -0.5 * displaced mass. Throws InvalidGeometry when d > l.
double ellipsoid_axial_added_mass(double l, double d, double rho);

// ITTC-57 friction line; throws ReynoldsOutOfRange below Re = 1e4.
double ittc57_cf(double reynolds);
// Hoerner axial drag coefficient of an ellipsoid body (frontal-area based).
double ellipsoid_axial_cd(double l, double d, double cf);
// Finite-length correction on the 2D cylinder cross-flow drag; piecewise in
// l/d and continuous at the branch point.
double crossflow_k1(double l_over_d);
inline double crossflow_cd(double l_over_d) { return 1.2 * crossflow_k1(l_over_d); }

struct MastAddedMass {
  double Xudot = 0.0;  // [kg]
  double Mudot = 0.0;  // [kg m]
  double Yvdot = 0.0;  // [kg]
};
// Elliptic-section rod formulas: axial term from width, cross-flow from
// chord, pitch moment with arm (d_h + h_m)/2.
MastAddedMass mast_added_mass(const VehicleGeometry& geom, double rho);

struct CrossflowAddedMass {
  double Yvdot = 0.0, Nvdot = 0.0, Nrdot = 0.0;  // horizontal plane, bare hull
  double Zwdot = 0.0, Mwdot = 0.0, Mqdot = 0.0;  // vertical plane, mounts included
  double Yvdot_thruster = 0.0, Zwdot_thruster = 0.0;  // one thruster body
};
// Strip-theory integrals over the hull profile. The vertical-plane terms use
// the reduced finned-section strip over the mount span [x_1, x_2]. Throws
// IntegrationTooCoarse if doubling the strip count moves any term > 0.5%.
CrossflowAddedMass crossflow_added_mass(const VehicleGeometry& geom, double rho,
                                        int strips = 2000);

struct AxialDamping {
  double hull = 0.0;       // [kg/m]
  double thrusters = 0.0;  // both bodies
  double mast = 0.0;
  double mounts = 0.0;
  double tunnel_openings = 0.0;
  double total = 0.0;
  double cf_hull = 0.0;    // friction coefficient at the hull Reynolds number
};
AxialDamping axial_damping(const VehicleGeometry& geom, double rho,
                           const EstimatorOptions& opt = {});

struct CrossflowDamping {
  double Yvv = 0.0, Zww = 0.0;           // [kg/m]
  double Nvv = 0.0, Mww = 0.0;           // [kg]
  double Mqq = 0.0, Nrr = 0.0;           // [kg m^2/rad^2]
  double Kvv = 0.0, Kpp = 0.0, Krr = 0.0;
};
CrossflowDamping crossflow_damping(const VehicleGeometry& geom, double rho,
                                   int strips = 2000);

struct BodyLift {
  double Yuv = 0.0, Zuw = 0.0;  // [kg/m]
  double Muw = 0.0, Nuv = 0.0;  // [kg]
  double x_cp = 0.0;            // pitch lever, = Muw / Zuw [m]
};
BodyLift body_lift(const VehicleGeometry& geom, double rho,
                   const EstimatorOptions& opt = {});

// Full coefficient set by superposition of hull, thruster-body and mast
// contributions; every entry tagged "analytic".
CoefficientSet estimate_all(const VehicleGeometry& geom, double rho,
                            const EstimatorOptions& opt = {});

// --- reporting ---------------------------------------------------------

struct ReportRow {
  std::string key;
  std::string display;
  double value = 0.0;
  std::string unit;
  std::string provenance;
  bool have_reference = false;
  double reference = 0.0;      // config-supplied reference value, if any
  bool sign_anomaly = false;   // estimate and reference disagree in sign
};

struct CoefficientReport {
  std::vector<ReportRow> rows;
  std::string text() const;  // aligned-column table plus anomaly footnotes
};

CoefficientReport make_report(const CoefficientSet& estimated,
                              const CoefficientSet* reference = nullptr);

}  // namespace hauv
