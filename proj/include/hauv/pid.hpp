#pragma once

#include <algorithm>
#include <cmath>

namespace hauv {

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;        // applied to the measured rate, not the error
  double integ_limit = 0.0;  // clamp on ki * integral, 0 disables the I term
  double out_limit = 0.0;    // symmetric output clamp, 0 = unclamped
  double integ_gate = 0.0;   // freeze the I term while |error| exceeds this, 0 = always on
};

// Incremental PID with anti-windup clamping. The derivative term damps on the
// supplied measurement rate so setpoint steps do not kick the output, and the
// integrator only runs inside the gate band so large transients (leg changes,
// slews) cannot wind it up.
class Pid {
public:
  Pid() = default;
  explicit Pid(const PidGains& g) : g_(g) {}

  double step(double error, double rate, double dt) {
    if (g_.integ_gate <= 0.0 || std::abs(error) <= g_.integ_gate) {
      integral_ += g_.ki * error * dt;
    }
    if (g_.integ_limit > 0.0) {
      integral_ = std::clamp(integral_, -g_.integ_limit, g_.integ_limit);
    } else if (g_.ki == 0.0) {
      integral_ = 0.0;
    }
    double out = g_.kp * error + integral_ - g_.kd * rate;
    if (g_.out_limit > 0.0) out = std::clamp(out, -g_.out_limit, g_.out_limit);
    return out;
  }

  void reset() { integral_ = 0.0; }
  double integral() const { return integral_; }
  const PidGains& gains() const { return g_; }

private:
  PidGains g_;
  double integral_ = 0.0;
};

}  // namespace hauv
