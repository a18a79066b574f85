#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hauv/geometry.hpp"
#include "hauv/types.hpp"

namespace hauv {

enum class ThrusterKind { open_propeller, tunnel };

struct ThrusterSpec {
  std::string id;
  ThrusterKind kind = ThrusterKind::open_propeller;
  double diameter = 0.076;       // propeller D [m]
  double kt = 0.35;              // thrust coefficient
  double kq = 0.028;             // torque coefficient
  double n_max = 55.0;           // [rev/s]
  double wake_fraction = 0.0;    // w_T, open propellers only
  double thrust_deduction = 0.0; // t_d, open propellers only
  double jet_deduction = 1.5;    // C, tunnel thrusters only
  double tunnel_area = 0.0045;   // A_th [m^2], tunnel thrusters only
  Vec3 position = Vec3::Zero();  // body frame [m]
  Vec3 direction = Vec3::UnitX();// unit thrust direction, body frame
  double spin = 0.0;             // propeller handedness: +1/-1, 0 = no torque
  double bollard_factor = 1.0;   // multiplies kt, from bollard-pull calibration
  double astern_efficiency = 1.0;// thrust scale for n < 0
  // Optional advance-ratio thrust table (J, kt), ascending in J.
  std::vector<std::pair<double, double>> kt_table;

  void validate() const;
};

using ThrusterBank = std::vector<ThrusterSpec>;

// Open-water thrust and shaft torque of a propeller at rotational speed n
// [rev/s]: T = rho D^4 kt n|n|, Q = spin rho D^5 kq n|n|.
// Throws OverSpeed when |n| > n_max.
std::pair<double, double> open_water_thrust(const ThrusterSpec& spec, double n, double rho);

// Hull-interaction corrected thrust of an externally mounted propeller:
// advance speed u(1 - w_T) selects kt from the table when configured, and the
// delivered force is scaled by (1 - t_d). Throws WrongKind for tunnels.
double hull_adjusted_thrust(const ThrusterSpec& spec, double n, double u, double rho);

// Tunnel-thruster thrust with the jet-deflection loss exp(-C (u/u_j)^2),
// u_j = sqrt(T0 / (rho A_th)). Exactly zero at n = 0. Throws WrongKind.
double tunnel_thrust(const ThrusterSpec& spec, double n, double u, double rho);

// Kind dispatcher used by the simulator.
double effective_thrust(const ThrusterSpec& spec, double n, double u, double rho);

// Extra axial drag from tunnel jets mixing with the hull flow, modeled as a
// u|u| increment on the displaced-volume scale; zero when every tunnel
// thruster is idle.
double tunnel_jet_drag(double displaced_volume, double cd_th, double u, double rho,
                       bool tunnel_active);

// Thruster configuration matrix: columns are the two horizontal thrusters,
// the vertical tunnel and the nose/tail lateral tunnels; roll and pitch rows
// are identically zero.
Mat65 config_matrix(const VehicleGeometry& geom);

// tau = B f. Throws DimensionMismatch unless f has five entries.
GeneralizedForce forces_to_tau(const Eigen::VectorXd& f, const VehicleGeometry& geom);

// Net roll moment from the open propellers' shaft torque.
double propeller_torque_moment(const ThrusterBank& bank, const Vec5& n, double rho);

}  // namespace hauv
