#include "hauv/model.hpp"

#include <cmath>

#include "hauv/errors.hpp"

namespace hauv {

Mat3 euler_rotation(double phi, double theta, double psi) {
  const double cphi = std::cos(phi), sphi = std::sin(phi);
  const double cth = std::cos(theta), sth = std::sin(theta);
  const double cpsi = std::cos(psi), spsi = std::sin(psi);
  Mat3 R;
  R << cpsi * cth, -spsi * cphi + cpsi * sth * sphi, spsi * sphi + cpsi * cphi * sth,
       spsi * cth, cpsi * cphi + sphi * sth * spsi, -cpsi * sphi + sth * spsi * cphi,
       -sth, cth * sphi, cth * cphi;
  return R;
}

Mat3 euler_rate_matrix(double phi, double theta) {
  if (std::abs(std::abs(theta) - M_PI / 2.0) < 1e-6) {
    throw Error(ErrorCode::PitchSingularity, "pitch within 1e-6 of +-pi/2");
  }
  const double cphi = std::cos(phi), sphi = std::sin(phi);
  const double cth = std::cos(theta), tth = std::tan(theta);
  Mat3 T;
  T << 1.0, sphi * tth, cphi * tth,
       0.0, cphi, -sphi,
       0.0, sphi / cth, cphi / cth;
  return T;
}

Vec6 velocity_transform(const Pose& pose, const BodyVelocity& nu) {
  Vec6 eta_dot;
  eta_dot.head<3>() = euler_rotation(pose.phi, pose.theta, pose.psi) * nu.linear();
  eta_dot.tail<3>() = euler_rate_matrix(pose.phi, pose.theta) * nu.angular();
  return eta_dot;
}

Mat6 rigid_body_inertia(const MassProperties& mp) {
  Mat6 M = Mat6::Zero();
  M.topLeftCorner<3, 3>() = mp.mass * Mat3::Identity();
  M.topRightCorner<3, 3>() = -mp.mass * skew(mp.r_g);
  M.bottomLeftCorner<3, 3>() = mp.mass * skew(mp.r_g);
  M.bottomRightCorner<3, 3>() = mp.inertia;
  return M;
}

Mat6 added_mass_matrix(const CoefficientSet& c) {
  Mat6 A = Mat6::Zero();
  A(0, 0) = -c.require(Coeff::Xudot);
  A(1, 1) = -c.require(Coeff::Yvdot);
  A(2, 2) = -c.require(Coeff::Zwdot);
  A(3, 3) = -c.require(Coeff::Kpdot);
  A(4, 4) = -c.require(Coeff::Mqdot);
  A(5, 5) = -c.require(Coeff::Nrdot);
  // Cross pairs: fill both slots from the listed values, symmetrize below.
  A(1, 5) = -c.require(Coeff::Yrdot);
  A(5, 1) = -c.require(Coeff::Nvdot);
  A(1, 3) = -c.require(Coeff::Kvdot);
  A(3, 1) = A(1, 3);
  A(3, 5) = -c.require(Coeff::Npdot);
  A(5, 3) = A(3, 5);
  A(0, 4) = -c.require(Coeff::Mudot);
  A(4, 0) = A(0, 4);
  A(2, 4) = -c.require(Coeff::Mwdot);
  A(4, 2) = A(2, 4);
  return 0.5 * (A + A.transpose());
}

Mat6 assemble_inertia(const CoefficientSet& coeffs, const MassProperties& mp) {
  return rigid_body_inertia(mp) + added_mass_matrix(coeffs);
}

Mat6 coriolis(const Mat6& M, const BodyVelocity& nu) {
  const Vec3 nu1 = nu.linear();
  const Vec3 nu2 = nu.angular();
  const Vec3 s1 = M.topLeftCorner<3, 3>() * nu1 + M.topRightCorner<3, 3>() * nu2;
  const Vec3 s2 = M.bottomLeftCorner<3, 3>() * nu1 + M.bottomRightCorner<3, 3>() * nu2;
  Mat6 C = Mat6::Zero();
  C.topRightCorner<3, 3>() = -skew(s1);
  C.bottomLeftCorner<3, 3>() = -skew(s1);
  C.bottomRightCorner<3, 3>() = -skew(s2);
  return C;
}

GeneralizedForce damping_force(const CoefficientSet& c, const BodyVelocity& nr) {
  const double u = nr.u, v = nr.v, w = nr.w;
  const double p = nr.p, q = nr.q, r = nr.r;
  GeneralizedForce f;
  f.X = c.value_or_zero(Coeff::Xuu) * u * std::abs(u);
  f.Y = c.value_or_zero(Coeff::Yvv) * v * std::abs(v) + c.value_or_zero(Coeff::Yuv) * u * v;
  f.Z = c.value_or_zero(Coeff::Zww) * w * std::abs(w) + c.value_or_zero(Coeff::Zuw) * u * w;
  f.K = c.value_or_zero(Coeff::Kpp) * p * std::abs(p) +
        c.value_or_zero(Coeff::Kvv) * v * std::abs(v) +
        c.value_or_zero(Coeff::Krr) * r * std::abs(r);
  f.M = c.value_or_zero(Coeff::Mqq) * q * std::abs(q) +
        c.value_or_zero(Coeff::Mww) * w * std::abs(w) +
        c.value_or_zero(Coeff::Muu) * u * std::abs(u) +
        c.value_or_zero(Coeff::Muw) * u * w;
  f.N = c.value_or_zero(Coeff::Nrr) * r * std::abs(r) +
        c.value_or_zero(Coeff::Nvv) * v * std::abs(v) +
        c.value_or_zero(Coeff::Nuv) * u * v;
  return f;
}

GeneralizedForce restoring_force(const Pose& pose, const MassProperties& mp) {
  const Mat3 Rt = euler_rotation(pose.phi, pose.theta, pose.psi).transpose();
  const Vec3 f_weight = Rt * Vec3(0.0, 0.0, mp.weight);
  const Vec3 f_buoy = Rt * Vec3(0.0, 0.0, -mp.buoyancy);
  GeneralizedForce g;
  const Vec3 force = f_weight + f_buoy;
  const Vec3 moment = mp.r_g.cross(f_weight) + mp.r_b.cross(f_buoy);
  g.X = force.x();
  g.Y = force.y();
  g.Z = force.z();
  g.K = moment.x();
  g.M = moment.y();
  g.N = moment.z();
  return g;
}

VehicleModel::VehicleModel(const CoefficientSet& coeffs, const MassProperties& mp)
    : coeffs_(coeffs), mp_(mp) {
  mp_.validate();
  M_ = assemble_inertia(coeffs_, mp_);
  Minv_ = M_.inverse();
  const double cond = M_.cwiseAbs().rowwise().sum().maxCoeff() *
                      Minv_.cwiseAbs().rowwise().sum().maxCoeff();
  if (!Minv_.allFinite() || cond > 1e12) {
    throw Error(ErrorCode::SingularInertia, "inertia matrix condition number exceeds 1e12");
  }
}

BodyVelocity VehicleModel::relative_velocity(const Pose& pose, const BodyVelocity& nu,
                                             const Vec3& current_earth) const {
  BodyVelocity nr = nu;
  if (!current_earth.isZero()) {
    const Vec3 current_body =
        euler_rotation(pose.phi, pose.theta, pose.psi).transpose() * current_earth;
    nr.u -= current_body.x();
    nr.v -= current_body.y();
    nr.w -= current_body.z();
  }
  return nr;
}

BodyVelocity VehicleModel::dynamics_rhs(const Pose& pose, const BodyVelocity& nu,
                                        const GeneralizedForce& tau,
                                        const Vec3& current_earth) const {
  const BodyVelocity nr = relative_velocity(pose, nu, current_earth);
  const Vec6 rhs = tau.vec() + damping_force(coeffs_, nr).vec() +
                   restoring_force(pose, mp_).vec() - coriolis(M_, nu) * nu.vec();
  return BodyVelocity::from_vec(Minv_ * rhs);
}

}  // namespace hauv
