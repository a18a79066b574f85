#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace hauv {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat45 = Eigen::Matrix<double, 4, 5>;
using Mat65 = Eigen::Matrix<double, 6, 5>;

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

inline Mat3 skew(const Vec3& a) {
  Mat3 s;
  s << 0.0, -a.z(), a.y(), a.z(), 0.0, -a.x(), -a.y(), a.x(), 0.0;
  return s;
}

// Position & Euler angles in the NED Earth-fixed frame. Angles are kept
// wrapped to (-pi, pi]; |theta| must stay clear of the +-pi/2 singularity.
struct Pose {
  double x = 0.0;      // north [m]
  double y = 0.0;      // east [m]
  double z = 0.0;      // down [m]
  double phi = 0.0;    // roll [rad]
  double theta = 0.0;  // pitch [rad]
  double psi = 0.0;    // yaw [rad]

  Vec6 vec() const {
    Vec6 v;
    v << x, y, z, phi, theta, psi;
    return v;
  }
  static Pose from_vec(const Vec6& v) {
    return Pose{v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  Pose wrapped() const {
    Pose p = *this;
    p.phi = wrap_angle(phi);
    p.theta = wrap_angle(theta);
    p.psi = wrap_angle(psi);
    return p;
  }
};

// Body-frame linear and angular velocity.
struct BodyVelocity {
  double u = 0.0;  // surge [m/s]
  double v = 0.0;  // sway [m/s]
  double w = 0.0;  // heave [m/s]
  double p = 0.0;  // roll rate [rad/s]
  double q = 0.0;  // pitch rate [rad/s]
  double r = 0.0;  // yaw rate [rad/s]

  Vec6 vec() const {
    Vec6 v6;
    v6 << u, v, w, p, q, r;
    return v6;
  }
  Vec3 linear() const { return Vec3(u, v, w); }
  Vec3 angular() const { return Vec3(p, q, r); }
  static BodyVelocity from_vec(const Vec6& v6) {
    return BodyVelocity{v6[0], v6[1], v6[2], v6[3], v6[4], v6[5]};
  }
};

// Body-frame force/moment vector.
struct GeneralizedForce {
  double X = 0.0;  // [N]
  double Y = 0.0;  // [N]
  double Z = 0.0;  // [N]
  double K = 0.0;  // [N m]
  double M = 0.0;  // [N m]
  double N = 0.0;  // [N m]

  Vec6 vec() const {
    Vec6 v;
    v << X, Y, Z, K, M, N;
    return v;
  }
  static GeneralizedForce from_vec(const Vec6& v) {
    return GeneralizedForce{v[0], v[1], v[2], v[3], v[4], v[5]};
  }
  GeneralizedForce operator+(const GeneralizedForce& o) const {
    return from_vec(vec() + o.vec());
  }
};

inline bool all_finite(const Vec6& v) { return v.allFinite(); }

}  // namespace hauv
