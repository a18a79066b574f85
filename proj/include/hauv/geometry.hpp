#pragma once

#include <utility>
#include <vector>

#include "hauv/types.hpp"

namespace hauv {

// Hull radius profile r(s), piecewise linear in the station coordinate s
// measured aft from the nose tip (s = 0 at the nose, s = hull length at the
// tail). Radii clamp to the end knots outside the table.
class HullProfile {
public:
  HullProfile() = default;
  explicit HullProfile(std::vector<std::pair<double, double>> knots);

  double radius(double s) const;
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }
  bool empty() const { return knots_.empty(); }

  // Torpedo default: elliptical nose cap, cylindrical midbody, conical
  // boat-tail. The nose ellipse is sampled into the piecewise-linear table.
  static HullProfile torpedo(double length, double diameter, double nose_length,
                             double tail_length, double tail_radius, int nose_samples = 33);

private:
  std::vector<std::pair<double, double>> knots_;  // (s [m], r [m]), s ascending
};

// Envelope dimensions, station coordinates and thruster placement. Stations
// x_n..x_3 are measured aft from the nose tip; cb_from_nose locates the body
// origin (center of buoyancy) on that axis, so body-frame x = cb_from_nose - s.
struct VehicleGeometry {
  double hull_length = 1.6;        // l_h [m]
  double hull_diameter = 0.23;     // d_h [m]
  double thruster_length = 0.30;   // horizontal thruster body l_th [m]
  double thruster_diameter = 0.10; // d_th [m]
  double mast_width = 0.065;       // w_m [m], athwartships
  double mast_height = 0.20;       // h_m [m]
  double mast_chord = 0.08;        // c_m [m], fore-aft
  double mast_station = 1.286;     // mast foot, aft of nose [m]

  double station_nose = 0.0;       // x_n [m]
  double station_mount_fwd = 1.25; // x_1 [m], thruster-mount section start
  double station_mount_aft = 1.55; // x_2 [m], thruster-mount section end
  double station_tail = 1.6;       // x_3 [m]
  double cb_from_nose = 0.826;     // body origin aft of nose tip [m]

  double mount_span = 0.195;       // b, mount span from section center [m]
  double lateral_arm = 0.195;      // y_th, horizontal-thruster moment arm [m]
  double x_th4 = 0.60;             // nose lateral thruster arm, body frame [m]
  double x_th5 = -0.70;            // tail lateral thruster arm, body frame [m]
  double tunnel_area = 0.0045;     // A_th [m^2]

  HullProfile profile;             // built by ensure_profile() when empty

  double body_x(double station) const { return cb_from_nose - station; }
  // Fills in the default torpedo profile if none was configured.
  void ensure_profile();
  // Throws InvalidGeometry on violated dimension/station constraints.
  void validate() const;
};

// Mass, buoyancy and inertia data about the body origin.
struct MassProperties {
  double mass = 52.0;          // [kg]
  Mat3 inertia = Mat3::Zero(); // about body origin [kg m^2]
  Vec3 r_g = Vec3(0, 0, 0.02); // center of gravity offset [m]
  Vec3 r_b = Vec3::Zero();     // center of buoyancy offset [m]
  double weight = 52.0 * 9.81; // W [N]
  double buoyancy = 52.0 * 9.81; // B [N]
  double displaced_volume = 0.0507; // [m^3]
  double rho = 1025.0;         // water density [kg/m^3]

  void validate() const;  // mass > 0, inertia SPD, volume > 0
};

}  // namespace hauv
