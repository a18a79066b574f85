#include "hauv/allocation.hpp"

#include <algorithm>
#include <cmath>

#include "hauv/errors.hpp"

namespace hauv {

Vec4 controllable_rows(const GeneralizedForce& tau) {
  return Vec4(tau.X, tau.Y, tau.Z, tau.N);
}

Mat45 controllable_config_matrix(const Mat65& B) {
  Mat45 out;
  out.row(0) = B.row(0);
  out.row(1) = B.row(1);
  out.row(2) = B.row(2);
  out.row(3) = B.row(5);
  return out;
}

void AllocationProblem::validate() const {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::ConfigError, "allocation epsilon must be > 0");
  for (int i = 0; i < 5; ++i) {
    if (!(weights[i] > 0.0)) {
      throw Error(ErrorCode::ConfigError, "allocation weights must be > 0");
    }
    if (!(f_min[i] < f_max[i])) {
      throw Error(ErrorCode::ConfigError, "thruster force limits must satisfy f_min < f_max");
    }
  }
}

AllocationResult allocate(const AllocationProblem& problem, AllocationTrace* trace) {
  problem.validate();
  AllocationResult res;

  Mat45 B = problem.B0;
  Vec5 c = Vec5::Zero();            // minus the pinned thruster forces
  std::array<bool, 5> pinned{};     // saturated or unavailable
  const Vec5 winv = problem.weights.cwiseInverse();

  for (int i = 0; i < 5; ++i) {
    if (!problem.available[i]) {
      pinned[i] = true;  // held at zero force, column removed
      B.col(i).setZero();
    }
  }

  auto solve = [&]() {
    Eigen::Matrix4d gram = B * winv.asDiagonal() * B.transpose();
    gram += problem.epsilon * Eigen::Matrix4d::Identity();
    const Vec4 rhs = problem.tau + problem.B0 * c;
    Vec5 f = -c + winv.asDiagonal() * B.transpose() * gram.ldlt().solve(rhs);
    for (int i = 0; i < 5; ++i) {
      if (pinned[i]) f[i] = -c[i];
    }
    return f;
  };

  Vec5 f = solve();
  if (trace != nullptr) trace->steps.push_back({B, c, f});

  for (int round = 0; round < 5; ++round) {
    bool clamped_any = false;
    for (int i = 0; i < 5; ++i) {
      if (pinned[i]) continue;
      double limit = f[i];
      if (f[i] < problem.f_min[i]) limit = problem.f_min[i];
      if (f[i] > problem.f_max[i]) limit = problem.f_max[i];
      if (limit != f[i]) {
        pinned[i] = true;
        c[i] = -limit;
        B.col(i).setZero();
        clamped_any = true;
      }
    }
    if (!clamped_any) break;
    res.iterations = round + 1;
    f = solve();
    if (trace != nullptr) trace->steps.push_back({B, c, f});
  }

  res.f = f;
  for (int i = 0; i < 5; ++i) res.saturated[i] = pinned[i] && problem.available[i];
  res.residual = (problem.B0 * res.f - problem.tau).norm();

  bool all_pinned = true;
  for (int i = 0; i < 5; ++i) all_pinned = all_pinned && pinned[i];
  res.infeasible = all_pinned && res.residual > 1e-6 * (1.0 + problem.tau.norm());
  return res;
}

Vec5 weight_schedule(double u, const WeightScheduleParams& p) {
  const double t = std::clamp((std::abs(u) - p.u_lo) / (p.u_hi - p.u_lo), 0.0, 1.0);
  const double ramp = 0.5 * (1.0 - std::cos(M_PI * t));
  const double w_lat = p.lateral_low + ramp * (p.lateral_high - p.lateral_low);
  const double w_hor = p.horizontal_low + ramp * (p.horizontal_high - p.horizontal_low);
  Vec5 w;
  w << w_hor, w_hor, p.vertical, w_lat, w_lat;
  return w;
}

}  // namespace hauv
