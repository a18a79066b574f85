#include "hauv/coefficients.hpp"

#include "hauv/errors.hpp"

namespace hauv {

namespace {

struct CoeffInfo {
  Coeff c;
  const char* key;
  const char* display;
  const char* unit;
};

const std::array<CoeffInfo, kCoeffCount>& table() {
  static const std::array<CoeffInfo, kCoeffCount> t = {{
      {Coeff::Xudot, "Xudot", "X_udot", "kg"},
      {Coeff::Yvdot, "Yvdot", "Y_vdot", "kg"},
      {Coeff::Yrdot, "Yrdot", "Y_rdot", "kg m/rad"},
      {Coeff::Zwdot, "Zwdot", "Z_wdot", "kg"},
      {Coeff::Kvdot, "Kvdot", "K_vdot", "kg m"},
      {Coeff::Kpdot, "Kpdot", "K_pdot", "kg m^2/rad"},
      {Coeff::Nvdot, "Nvdot", "N_vdot", "kg m"},
      {Coeff::Npdot, "Npdot", "N_pdot", "kg m^2/rad"},
      {Coeff::Mudot, "Mudot", "M_udot", "kg m"},
      {Coeff::Mwdot, "Mwdot", "M_wdot", "kg m"},
      {Coeff::Mqdot, "Mqdot", "M_qdot", "kg m^2/rad"},
      {Coeff::Nrdot, "Nrdot", "N_rdot", "kg m^2/rad"},
      {Coeff::Xuu, "Xuu", "X_u|u|", "kg/m"},
      {Coeff::Yvv, "Yvv", "Y_v|v|", "kg/m"},
      {Coeff::Zww, "Zww", "Z_w|w|", "kg/m"},
      {Coeff::Kpp, "Kpp", "K_p|p|", "kg m^2/rad^2"},
      {Coeff::Kvv, "Kvv", "K_v|v|", "kg"},
      {Coeff::Krr, "Krr", "K_r|r|", "kg m^2/rad^2"},
      {Coeff::Mww, "Mww", "M_w|w|", "kg"},
      {Coeff::Mqq, "Mqq", "M_q|q|", "kg m^2/rad^2"},
      {Coeff::Muu, "Muu", "M_u|u|", "kg"},
      {Coeff::Nvv, "Nvv", "N_v|v|", "kg"},
      {Coeff::Nrr, "Nrr", "N_r|r|", "kg m^2/rad^2"},
      {Coeff::Yuv, "Yuv", "Y_uv", "kg/m"},
      {Coeff::Zuw, "Zuw", "Z_uw", "kg/m"},
      {Coeff::Muw, "Muw", "M_uw", "kg"},
      {Coeff::Nuv, "Nuv", "N_uv", "kg"},
  }};
  return t;
}

const CoeffInfo& info(Coeff c) { return table()[static_cast<int>(c)]; }

}  // namespace

const std::array<Coeff, kCoeffCount>& all_coeffs() {
  static const auto a = [] {
    std::array<Coeff, kCoeffCount> out{};
    for (int i = 0; i < kCoeffCount; ++i) out[i] = table()[i].c;
    return out;
  }();
  return a;
}

const std::array<Coeff, 12>& added_mass_coeffs() {
  static const std::array<Coeff, 12> a = {
      Coeff::Xudot, Coeff::Yvdot, Coeff::Yrdot, Coeff::Zwdot,
      Coeff::Kvdot, Coeff::Kpdot, Coeff::Nvdot, Coeff::Npdot,
      Coeff::Mudot, Coeff::Mwdot, Coeff::Mqdot, Coeff::Nrdot,
  };
  return a;
}

std::string coeff_key(Coeff c) { return info(c).key; }
std::string coeff_display(Coeff c) { return info(c).display; }
std::string coeff_unit(Coeff c) { return info(c).unit; }

Coeff coeff_from_key(const std::string& key) {
  for (const auto& i : table()) {
    if (key == i.key) return i.c;
  }
  throw Error(ErrorCode::UnknownCoefficient, "unknown coefficient '" + key + "'");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::analytic: return "analytic";
    case Provenance::cfd: return "cfd";
    case Provenance::calibrated: return "calibrated";
  }
  return "analytic";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "analytic") return Provenance::analytic;
  if (s == "cfd") return Provenance::cfd;
  if (s == "calibrated") return Provenance::calibrated;
  throw Error(ErrorCode::ConfigError, "unknown provenance '" + s + "'");
}

void CoefficientSet::set(Coeff c, double value, Provenance p) {
  entries_[static_cast<int>(c)] = CoeffEntry{value, p};
}

bool CoefficientSet::has(Coeff c) const {
  return entries_[static_cast<int>(c)].has_value();
}

std::optional<CoeffEntry> CoefficientSet::entry(Coeff c) const {
  return entries_[static_cast<int>(c)];
}

double CoefficientSet::value_or_zero(Coeff c) const {
  const auto& e = entries_[static_cast<int>(c)];
  return e ? e->value : 0.0;
}

double CoefficientSet::require(Coeff c) const {
  const auto& e = entries_[static_cast<int>(c)];
  if (!e) {
    throw Error(ErrorCode::MissingCoefficient, "missing coefficient " + coeff_display(c));
  }
  return e->value;
}

Provenance CoefficientSet::provenance(Coeff c) const {
  const auto& e = entries_[static_cast<int>(c)];
  if (!e) {
    throw Error(ErrorCode::MissingCoefficient, "missing coefficient " + coeff_display(c));
  }
  return e->provenance;
}

bool CoefficientSet::operator==(const CoefficientSet& o) const {
  for (int i = 0; i < kCoeffCount; ++i) {
    const auto& a = entries_[i];
    const auto& b = o.entries_[i];
    if (a.has_value() != b.has_value()) return false;
    if (a && (a->value != b->value || a->provenance != b->provenance)) return false;
  }
  return true;
}

CalibrationFactors calibration_from_keys(const std::map<std::string, double>& keyed) {
  CalibrationFactors out;
  for (const auto& [key, factor] : keyed) out[coeff_from_key(key)] = factor;
  return out;
}

CoefficientSet apply_calibration(const CoefficientSet& coeffs, const CalibrationFactors& factors) {
  CoefficientSet out = coeffs;
  for (const auto& [c, factor] : factors) {
    if (!coeffs.has(c)) {
      throw Error(ErrorCode::UnknownCoefficient,
                  "calibration factor names absent coefficient " + coeff_display(c));
    }
    out.set(c, coeffs.require(c) * factor, Provenance::calibrated);
  }
  return out;
}

}  // namespace hauv
