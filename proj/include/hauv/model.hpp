#pragma once

#include "hauv/coefficients.hpp"
#include "hauv/geometry.hpp"
#include "hauv/types.hpp"

namespace hauv {

// Body-to-Earth rotation of the linear velocity block (Z-Y-X Euler angles).
Mat3 euler_rotation(double phi, double theta, double psi);
// Euler angle rate transformation; throws PitchSingularity when |theta| is
// within 1e-6 of +-pi/2.
Mat3 euler_rate_matrix(double phi, double theta);

// Earth-frame rate of the generalized position: eta_dot = J(eta) nu.
Vec6 velocity_transform(const Pose& pose, const BodyVelocity& nu);

// Rigid-body inertia about the body origin, with the CG offset coupling.
Mat6 rigid_body_inertia(const MassProperties& mp);

// Added-mass matrix from the coefficient set. The single listed value of
// each cross pair (e.g. M_wdot vs Z_qdot) populates both slots, then the
// matrix is symmetrized. Throws MissingCoefficient if any of the twelve
// added-mass derivatives is absent.
Mat6 added_mass_matrix(const CoefficientSet& coeffs);

// M = M_RB + M_A; symmetric by construction.
Mat6 assemble_inertia(const CoefficientSet& coeffs, const MassProperties& mp);

// Coriolis/centripetal matrix from a symmetric inertia matrix; skew-symmetric
// for every nu by construction.
Mat6 coriolis(const Mat6& M, const BodyVelocity& nu);

// Quadratic damping plus body-lift force at the water-relative velocity.
// Coefficients are stored negative-signed, so the returned vector is the
// physical force (it opposes the motion). Absent entries contribute zero.
GeneralizedForce damping_force(const CoefficientSet& coeffs, const BodyVelocity& nu_r);

// Gravity/buoyancy force and moment in the body frame (the physical righting
// wrench; zero for a neutrally buoyant vehicle with coincident centers).
GeneralizedForce restoring_force(const Pose& pose, const MassProperties& mp);

// Precomputed plant: inertia and its inverse plus the coefficient set.
class VehicleModel {
public:
  VehicleModel(const CoefficientSet& coeffs, const MassProperties& mp);

  const Mat6& inertia() const { return M_; }
  const Mat6& inertia_inverse() const { return Minv_; }
  const CoefficientSet& coeffs() const { return coeffs_; }
  const MassProperties& mass_props() const { return mp_; }

  // nu_dot = M^-1 [tau + damping(nu_r) + restoring(eta) - C(nu) nu], with
  // nu_r = nu minus the Earth-frame current rotated into the body frame
  // (translational components only).
  BodyVelocity dynamics_rhs(const Pose& pose, const BodyVelocity& nu,
                            const GeneralizedForce& tau, const Vec3& current_earth) const;

  BodyVelocity relative_velocity(const Pose& pose, const BodyVelocity& nu,
                                 const Vec3& current_earth) const;

private:
  CoefficientSet coeffs_;
  MassProperties mp_;
  Mat6 M_;
  Mat6 Minv_;
};

}  // namespace hauv
