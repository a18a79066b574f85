#pragma once

#include <array>
#include <vector>

#include "hauv/types.hpp"

namespace hauv {

// Allocation works on the controllable rows {X, Y, Z, N} of the generalized
// force; roll and pitch are not actuated.
inline constexpr int kControllableRows = 4;

Vec4 controllable_rows(const GeneralizedForce& tau);
Mat45 controllable_config_matrix(const Mat65& B);

struct AllocationProblem {
  Vec4 tau = Vec4::Zero();             // demanded [X, Y, Z, N]
  Mat45 B0 = Mat45::Zero();            // unconstrained configuration matrix
  Vec5 weights = Vec5::Ones();         // diagonal of W, all > 0
  Vec5 f_min = Vec5::Constant(-35.0);  // [N]
  Vec5 f_max = Vec5::Constant(35.0);   // [N]
  double epsilon = 1e-6;               // pseudo-inverse regularization
  std::array<bool, 5> available = {true, true, true, true, true};

  void validate() const;
};

struct AllocationResult {
  Vec5 f = Vec5::Zero();
  std::array<bool, 5> saturated = {false, false, false, false, false};
  double residual = 0.0;  // ||B0 f - tau|| over the controllable rows
  int iterations = 0;     // redistribution rounds, at most one per thruster
  bool infeasible = false;
};

struct AllocationTrace {
  struct Step {
    Mat45 B;
    Vec5 c;
    Vec5 f;
  };
  std::vector<Step> steps;
};

// Redistributed pseudo-inverse: solve the weighted regularized pseudo-inverse
// expression, clamp violating thrusters to their limits, fold the clamped
// contribution into the saturation vector and zero the matching columns, and
// repeat until no new thruster saturates. The result honors the box
// constraints exactly; the infeasible flag reports an unmet demand once every
// thruster is pinned.
AllocationResult allocate(const AllocationProblem& problem, AllocationTrace* trace = nullptr);

struct WeightScheduleParams {
  double u_lo = 0.2;           // [m/s] below this the lateral thrusters are preferred
  double u_hi = 0.5;           // [m/s] above this the horizontal thrusters are preferred
  double lateral_low = 0.5;    // lateral weight at u <= u_lo
  double lateral_high = 2.0;   // lateral weight at u >= u_hi
  double horizontal_low = 2.0; // horizontal weight at u <= u_lo
  double horizontal_high = 0.5;
  double vertical = 1.0;
};

// Diagonal of W as a function of surge speed: continuous, monotone per
// thruster group, lateral-preferring at survey speed and
// horizontal-preferring once the laterals lose efficiency.
Vec5 weight_schedule(double u, const WeightScheduleParams& params = {});

}  // namespace hauv
