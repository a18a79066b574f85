#include "hauv/propulsion.hpp"

#include <algorithm>
#include <cmath>

#include "hauv/errors.hpp"

namespace hauv {

void ThrusterSpec::validate() const {
  if (!(diameter > 0.0)) throw Error(ErrorCode::InvalidGeometry, id + ": diameter must be > 0");
  if (!(n_max > 0.0)) throw Error(ErrorCode::InvalidGeometry, id + ": n_max must be > 0");
  if (wake_fraction < 0.0 || wake_fraction >= 1.0) {
    throw Error(ErrorCode::InvalidGeometry, id + ": wake fraction outside [0, 1)");
  }
  if (thrust_deduction < 0.0 || thrust_deduction >= 1.0) {
    throw Error(ErrorCode::InvalidGeometry, id + ": thrust deduction outside [0, 1)");
  }
  if (kind == ThrusterKind::tunnel && !(tunnel_area > 0.0)) {
    throw Error(ErrorCode::InvalidGeometry, id + ": tunnel area must be > 0");
  }
  for (size_t i = 1; i < kt_table.size(); ++i) {
    if (kt_table[i].first <= kt_table[i - 1].first) {
      throw Error(ErrorCode::InvalidGeometry, id + ": kt table must be ascending in J");
    }
  }
}

namespace {

double interp_kt(const std::vector<std::pair<double, double>>& table, double j) {
  if (table.empty()) return 0.0;
  if (j <= table.front().first) return table.front().second;
  if (j >= table.back().first) return table.back().second;
  auto it = std::upper_bound(table.begin(), table.end(), j,
                             [](double v, const auto& k) { return v < k.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (j - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

double astern_scale(const ThrusterSpec& spec, double n) {
  return n < 0.0 ? spec.astern_efficiency : 1.0;
}

}  // namespace

std::pair<double, double> open_water_thrust(const ThrusterSpec& spec, double n, double rho) {
  if (std::abs(n) > spec.n_max * (1.0 + 1e-9)) {
    throw Error(ErrorCode::OverSpeed, spec.id + ": commanded speed exceeds n_max");
  }
  const double d4 = std::pow(spec.diameter, 4.0);
  const double nn = n * std::abs(n);
  const double thrust = rho * d4 * spec.kt * spec.bollard_factor * nn;
  const double torque = spec.spin * rho * d4 * spec.diameter * spec.kq * nn;
  return {thrust, torque};
}

double hull_adjusted_thrust(const ThrusterSpec& spec, double n, double u, double rho) {
  if (spec.kind != ThrusterKind::open_propeller) {
    throw Error(ErrorCode::WrongKind, spec.id + ": hull-adjusted law needs an open propeller");
  }
  if (std::abs(n) > spec.n_max * (1.0 + 1e-9)) {
    throw Error(ErrorCode::OverSpeed, spec.id + ": commanded speed exceeds n_max");
  }
  const double u_p = u * (1.0 - spec.wake_fraction);
  double kt = spec.kt;
  if (!spec.kt_table.empty() && std::abs(n) > 1e-9) {
    kt = interp_kt(spec.kt_table, u_p / (std::abs(n) * spec.diameter));
  }
  const double d4 = std::pow(spec.diameter, 4.0);
  const double produced = rho * d4 * kt * spec.bollard_factor * n * std::abs(n);
  return produced * (1.0 - spec.thrust_deduction) * astern_scale(spec, n);
}

double tunnel_thrust(const ThrusterSpec& spec, double n, double u, double rho) {
  if (spec.kind != ThrusterKind::tunnel) {
    throw Error(ErrorCode::WrongKind, spec.id + ": tunnel law needs a tunnel thruster");
  }
  if (n == 0.0) return 0.0;  // jet speed is undefined at rest
  const auto [t0, q0] = open_water_thrust(spec, n, rho);
  const double u_j = std::sqrt(std::abs(t0) / (rho * spec.tunnel_area));
  const double ratio = u / u_j;
  return t0 * std::exp(-spec.jet_deduction * ratio * ratio) * astern_scale(spec, n);
}

double effective_thrust(const ThrusterSpec& spec, double n, double u, double rho) {
  return spec.kind == ThrusterKind::tunnel ? tunnel_thrust(spec, n, u, rho)
                                           : hull_adjusted_thrust(spec, n, u, rho);
}

double tunnel_jet_drag(double displaced_volume, double cd_th, double u, double rho,
                       bool tunnel_active) {
  if (!tunnel_active) return 0.0;
  return -0.5 * rho * std::pow(displaced_volume, 2.0 / 3.0) * cd_th * u * std::abs(u);
}

Mat65 config_matrix(const VehicleGeometry& geom) {
  Mat65 B = Mat65::Zero();
  B(0, 0) = 1.0;
  B(0, 1) = 1.0;
  B(1, 3) = 1.0;
  B(1, 4) = 1.0;
  B(2, 2) = 1.0;
  B(5, 0) = geom.lateral_arm;
  B(5, 1) = -geom.lateral_arm;
  B(5, 3) = geom.x_th4;
  B(5, 4) = geom.x_th5;
  return B;
}

GeneralizedForce forces_to_tau(const Eigen::VectorXd& f, const VehicleGeometry& geom) {
  if (f.size() != 5) {
    throw Error(ErrorCode::DimensionMismatch, "thrust vector must have five entries");
  }
  return GeneralizedForce::from_vec(config_matrix(geom) * f);
}

double propeller_torque_moment(const ThrusterBank& bank, const Vec5& n, double rho) {
  double roll = 0.0;
  for (size_t i = 0; i < bank.size() && i < 5; ++i) {
    const auto& spec = bank[i];
    if (spec.kind != ThrusterKind::open_propeller || spec.spin == 0.0) continue;
    roll += open_water_thrust(spec, n[static_cast<int>(i)], rho).second;
  }
  return roll;
}

}  // namespace hauv
