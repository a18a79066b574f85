#include "hauv/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hauv/errors.hpp"

namespace hauv {

HullProfile::HullProfile(std::vector<std::pair<double, double>> knots)
    : knots_(std::move(knots)) {
  if (knots_.size() < 2) {
    throw Error(ErrorCode::InvalidGeometry, "hull profile needs at least two knots");
  }
  for (size_t i = 1; i < knots_.size(); ++i) {
    if (knots_[i].first <= knots_[i - 1].first) {
      throw Error(ErrorCode::InvalidGeometry, "hull profile stations must be ascending");
    }
  }
  for (const auto& [s, r] : knots_) {
    if (r < 0.0) throw Error(ErrorCode::InvalidGeometry, "hull profile radius < 0");
  }
}

double HullProfile::radius(double s) const {
  if (knots_.empty()) return 0.0;
  if (s <= knots_.front().first) return knots_.front().second;
  if (s >= knots_.back().first) return knots_.back().second;
  auto it = std::upper_bound(knots_.begin(), knots_.end(), s,
                             [](double v, const auto& k) { return v < k.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (s - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

HullProfile HullProfile::torpedo(double length, double diameter, double nose_length,
                                 double tail_length, double tail_radius, int nose_samples) {
  const double rmax = 0.5 * diameter;
  std::vector<std::pair<double, double>> knots;
  knots.reserve(nose_samples + 3);
  // Quarter-ellipse nose: r(s) = R sqrt(1 - ((s - a)/a)^2), s in [0, a].
  for (int i = 0; i < nose_samples; ++i) {
    const double s = nose_length * static_cast<double>(i) / (nose_samples - 1);
    const double t = (s - nose_length) / nose_length;
    knots.emplace_back(s, rmax * std::sqrt(std::max(0.0, 1.0 - t * t)));
  }
  knots.emplace_back(length - tail_length, rmax);
  knots.emplace_back(length, tail_radius);
  return HullProfile(std::move(knots));
}

void VehicleGeometry::ensure_profile() {
  if (profile.empty()) {
    profile = HullProfile::torpedo(hull_length, hull_diameter, 0.10, 0.25, 0.055);
  }
}

void VehicleGeometry::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw Error(ErrorCode::InvalidGeometry, std::string("dimension must be > 0: ") + name);
    }
  };
  positive(hull_length, "hull_length");
  positive(hull_diameter, "hull_diameter");
  positive(thruster_length, "thruster_length");
  positive(thruster_diameter, "thruster_diameter");
  positive(mast_width, "mast_width");
  positive(mast_height, "mast_height");
  positive(mast_chord, "mast_chord");
  positive(mount_span, "mount_span");
  positive(tunnel_area, "tunnel_area");
  if (!(station_nose < station_mount_fwd && station_mount_fwd < station_mount_aft &&
        station_mount_aft <= station_tail)) {
    throw Error(ErrorCode::InvalidGeometry, "stations must satisfy x_n < x_1 < x_2 <= x_3");
  }
  if (hull_diameter > hull_length) {
    throw Error(ErrorCode::InvalidGeometry, "hull diameter exceeds hull length");
  }
  if (!profile.empty()) {
    for (const auto& [s, r] : profile.knots()) {
      if (r > 0.5 * hull_diameter + 1e-9) {
        throw Error(ErrorCode::InvalidGeometry, "profile radius exceeds hull radius");
      }
    }
  }
}

void MassProperties::validate() const {
  if (!(mass > 0.0)) throw Error(ErrorCode::InvalidGeometry, "mass must be > 0");
  if (!(displaced_volume > 0.0)) {
    throw Error(ErrorCode::InvalidGeometry, "displaced volume must be > 0");
  }
  if (!(rho > 0.0)) throw Error(ErrorCode::InvalidGeometry, "water density must be > 0");
  if (!inertia.isApprox(inertia.transpose(), 1e-9)) {
    throw Error(ErrorCode::InvalidGeometry, "inertia tensor must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> es(inertia);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw Error(ErrorCode::InvalidGeometry, "inertia tensor must be positive definite");
  }
}

}  // namespace hauv
