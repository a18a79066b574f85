#pragma once

// Independent reference implementations the tests check the library against.
// Everything here is deliberately written from scratch (plain loops, no
// shared helpers) so a bug in the library cannot hide in its own oracle.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "hauv/types.hpp"

namespace oracle {

// Element-wise Z-Y-X Euler rotation built by explicit matrix multiplication
// of the three elementary rotations.
inline hauv::Mat3 rotation(double phi, double theta, double psi) {
  double rz[3][3] = {{std::cos(psi), -std::sin(psi), 0},
                     {std::sin(psi), std::cos(psi), 0},
                     {0, 0, 1}};
  double ry[3][3] = {{std::cos(theta), 0, std::sin(theta)},
                     {0, 1, 0},
                     {-std::sin(theta), 0, std::cos(theta)}};
  double rx[3][3] = {{1, 0, 0},
                     {0, std::cos(phi), -std::sin(phi)},
                     {0, std::sin(phi), std::cos(phi)}};
  double zy[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) zy[i][j] += rz[i][k] * ry[k][j];
  double zyx[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) zyx[i][j] += zy[i][k] * rx[k][j];
  hauv::Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = zyx[i][j];
  return out;
}

// Euler-rate matrix written out term by term.
inline hauv::Mat3 euler_rates(double phi, double theta) {
  hauv::Mat3 t;
  t(0, 0) = 1.0;
  t(0, 1) = std::sin(phi) * std::sin(theta) / std::cos(theta);
  t(0, 2) = std::cos(phi) * std::sin(theta) / std::cos(theta);
  t(1, 0) = 0.0;
  t(1, 1) = std::cos(phi);
  t(1, 2) = -std::sin(phi);
  t(2, 0) = 0.0;
  t(2, 1) = std::sin(phi) / std::cos(theta);
  t(2, 2) = std::cos(phi) / std::cos(theta);
  return t;
}

// Plain Gaussian elimination with partial pivoting.
inline hauv::Vec6 gauss_solve(hauv::Mat6 a, hauv::Vec6 b) {
  constexpr int n = 6;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    }
    if (pivot != col) {
      for (int k = 0; k < n; ++k) std::swap(a(col, k), a(pivot, k));
      std::swap(b(col), b(pivot));
    }
    for (int row = col + 1; row < n; ++row) {
      const double factor = a(row, col) / a(col, col);
      for (int k = col; k < n; ++k) a(row, k) -= factor * a(col, k);
      b(row) -= factor * b(col);
    }
  }
  hauv::Vec6 x;
  for (int row = n - 1; row >= 0; --row) {
    double sum = b(row);
    for (int k = row + 1; k < n; ++k) sum -= a(row, k) * x(k);
    x(row) = sum / a(row, row);
  }
  return x;
}

// Exact minimizer of |B f - tau|^2 + eps f^T W f over the box, by
// enumerating every free/low/high activity pattern of the five thrusters and
// keeping the best feasible stationary point.
inline hauv::Vec5 constrained_least_squares(const hauv::Mat45& B, const hauv::Vec4& tau,
                                            const hauv::Vec5& w, const hauv::Vec5& lo,
                                            const hauv::Vec5& hi, double eps) {
  hauv::Vec5 best = hauv::Vec5::Zero();
  double best_obj = std::numeric_limits<double>::infinity();
  for (int pattern = 0; pattern < 243; ++pattern) {
    int digits[5];
    int p = pattern;
    for (int i = 0; i < 5; ++i) {
      digits[i] = p % 3;  // 0 free, 1 low, 2 high
      p /= 3;
    }
    std::vector<int> free_idx;
    hauv::Vec5 f = hauv::Vec5::Zero();
    for (int i = 0; i < 5; ++i) {
      if (digits[i] == 0) {
        free_idx.push_back(i);
      } else {
        f[i] = digits[i] == 1 ? lo[i] : hi[i];
      }
    }
    const int nf = static_cast<int>(free_idx.size());
    if (nf > 0) {
      Eigen::MatrixXd bf(4, nf);
      for (int k = 0; k < nf; ++k) bf.col(k) = B.col(free_idx[k]);
      hauv::Vec4 rhs = tau;
      for (int i = 0; i < 5; ++i) {
        if (digits[i] != 0) rhs -= B.col(i) * f[i];
      }
      Eigen::MatrixXd normal = bf.transpose() * bf;
      for (int k = 0; k < nf; ++k) normal(k, k) += eps * w[free_idx[k]];
      const Eigen::VectorXd sol = normal.ldlt().solve(bf.transpose() * rhs);
      bool feasible = true;
      for (int k = 0; k < nf; ++k) {
        if (sol[k] < lo[free_idx[k]] - 1e-9 || sol[k] > hi[free_idx[k]] + 1e-9) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      for (int k = 0; k < nf; ++k) f[free_idx[k]] = sol[k];
    }
    double obj = (B * f - tau).squaredNorm();
    for (int i = 0; i < 5; ++i) obj += eps * w[i] * f[i] * f[i];
    if (obj < best_obj) {
      best_obj = obj;
      best = f;
    }
  }
  return best;
}

// Coarse 5-D grid search with one refinement pass around the best cell.
inline hauv::Vec5 grid_search_least_squares(const hauv::Mat45& B, const hauv::Vec4& tau,
                                            const hauv::Vec5& lo, const hauv::Vec5& hi,
                                            int points = 13) {
  hauv::Vec5 center = 0.5 * (lo + hi);
  hauv::Vec5 half = 0.5 * (hi - lo);
  hauv::Vec5 best = center;
  double best_obj = std::numeric_limits<double>::infinity();
  for (int refine = 0; refine < 4; ++refine) {
    hauv::Vec5 step = 2.0 * half / (points - 1);
    std::array<int, 5> idx{};
    const long total = static_cast<long>(std::pow(points, 5));
    for (long flat = 0; flat < total; ++flat) {
      long rem = flat;
      hauv::Vec5 f;
      for (int i = 0; i < 5; ++i) {
        idx[i] = static_cast<int>(rem % points);
        rem /= points;
        f[i] = std::clamp(center[i] - half[i] + idx[i] * step[i], lo[i], hi[i]);
      }
      const double obj = (B * f - tau).squaredNorm();
      if (obj < best_obj) {
        best_obj = obj;
        best = f;
      }
    }
    center = best;
    half = 2.0 * step;  // shrink the window around the best cell
    for (int i = 0; i < 5; ++i) {
      half[i] = std::min(half[i], 0.5 * (hi[i] - lo[i]));
    }
  }
  return best;
}

}  // namespace oracle
