#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hauv {

// Hydrodynamic derivatives. Added-mass entries first, then quadratic
// damping, then the lift derivatives. Values carry the usual sign
// convention: dissipative diagonal terms are negative as stored.
enum class Coeff {
  Xudot, Yvdot, Yrdot, Zwdot, Kvdot, Kpdot, Nvdot, Npdot,
  Mudot, Mwdot, Mqdot, Nrdot,
  Xuu, Yvv, Zww, Kpp, Kvv, Krr, Mww, Mqq, Muu, Nvv, Nrr,
  Yuv, Zuw, Muw, Nuv,
};

inline constexpr int kCoeffCount = 27;

const std::array<Coeff, kCoeffCount>& all_coeffs();
const std::array<Coeff, 12>& added_mass_coeffs();

// Canonical config/CLI key, e.g. "Xudot", "Yvv", "Zuw".
std::string coeff_key(Coeff c);
// Pretty name for reports, e.g. "X_u|u|".
std::string coeff_display(Coeff c);
std::string coeff_unit(Coeff c);
// Key -> coefficient; throws UnknownCoefficient.
Coeff coeff_from_key(const std::string& key);

enum class Provenance { analytic, cfd, calibrated };
std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct CoeffEntry {
  double value = 0.0;
  Provenance provenance = Provenance::analytic;
};

// Sparse, provenance-tagged coefficient table. Entries are optional so a
// partially specified set (e.g. a config override) is representable; the
// inertia assembly insists on completeness of the added-mass block.
class CoefficientSet {
public:
  void set(Coeff c, double value, Provenance p = Provenance::analytic);
  bool has(Coeff c) const;
  std::optional<CoeffEntry> entry(Coeff c) const;
  // Value or 0 when absent (absent damping/lift terms contribute nothing).
  double value_or_zero(Coeff c) const;
  // Value; throws MissingCoefficient naming the derivative when absent.
  double require(Coeff c) const;
  Provenance provenance(Coeff c) const;

  bool operator==(const CoefficientSet& o) const;

private:
  std::array<std::optional<CoeffEntry>, kCoeffCount> entries_{};
};

// Multiplicative sea-trial correction factors, keyed by coefficient.
using CalibrationFactors = std::map<Coeff, double>;

CalibrationFactors calibration_from_keys(const std::map<std::string, double>& keyed);

// Scale the named coefficients and flip their provenance to "calibrated";
// untouched entries pass through unchanged. Factors naming an absent
// coefficient raise UnknownCoefficient.
CoefficientSet apply_calibration(const CoefficientSet& coeffs, const CalibrationFactors& factors);

}  // namespace hauv
