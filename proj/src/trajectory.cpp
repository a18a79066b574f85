#include "hauv/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hauv/errors.hpp"

namespace hauv {

namespace {

constexpr const char* kTrajectoryHeader =
    "t,x,y,z,phi,theta,psi,u,v,w,p,q,r,X,Y,Z,K,M,N,f1,f2,f3,f4,f5,mode,e,ev";

void put(std::ostream& os, double v) { os << std::setprecision(17) << v; }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, int line_no) {
  try {
    size_t idx = 0;
    const double v = std::stod(s, &idx);
    while (idx < s.size() && std::isspace(static_cast<unsigned char>(s[idx]))) ++idx;
    if (idx != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedLog,
                "line " + std::to_string(line_no) + ": bad numeric field '" + s + "'");
  }
}

}  // namespace

void TrajectoryLog::write_csv(std::ostream& os) const {
  os << kTrajectoryHeader << "\n";
  for (const auto& r : records) {
    put(os, r.t);
    for (double v : {r.pose.x, r.pose.y, r.pose.z, r.pose.phi, r.pose.theta, r.pose.psi,
                     r.nu.u, r.nu.v, r.nu.w, r.nu.p, r.nu.q, r.nu.r,
                     r.tau.X, r.tau.Y, r.tau.Z, r.tau.K, r.tau.M, r.tau.N,
                     r.f[0], r.f[1], r.f[2], r.f[3], r.f[4]}) {
      os << ',';
      put(os, v);
    }
    os << ',' << r.mode << ',';
    put(os, r.e);
    os << ',';
    put(os, r.ev);
    os << "\n";
  }
}

void TrajectoryLog::write_csv_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::ConfigError, "cannot open " + path + " for writing");
  write_csv(os);
}

TrajectoryLog TrajectoryLog::read_csv(std::istream& is) {
  TrajectoryLog log;
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line)) {
    throw Error(ErrorCode::MalformedLog, "line 1: empty trajectory log");
  }
  ++line_no;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 27) {
      throw Error(ErrorCode::MalformedLog,
                  "line " + std::to_string(line_no) + ": expected 27 fields, got " +
                      std::to_string(fields.size()));
    }
    TrajectoryRecord r;
    int k = 0;
    auto next = [&]() { return parse_double(fields[k++], line_no); };
    r.t = next();
    r.pose.x = next(); r.pose.y = next(); r.pose.z = next();
    r.pose.phi = next(); r.pose.theta = next(); r.pose.psi = next();
    r.nu.u = next(); r.nu.v = next(); r.nu.w = next();
    r.nu.p = next(); r.nu.q = next(); r.nu.r = next();
    r.tau.X = next(); r.tau.Y = next(); r.tau.Z = next();
    r.tau.K = next(); r.tau.M = next(); r.tau.N = next();
    for (int i = 0; i < 5; ++i) r.f[i] = next();
    r.mode = fields[k++];
    r.e = next();
    r.ev = next();
    log.records.push_back(r);
  }
  return log;
}

TrajectoryLog TrajectoryLog::read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  return read_csv(is);
}

void RpmLog::write_csv(std::ostream& os) const {
  os << "t,n1,n2,n3,n4,n5\n";
  for (const auto& s : samples) {
    put(os, s.t);
    for (int i = 0; i < 5; ++i) {
      os << ',';
      put(os, s.n[i]);
    }
    os << "\n";
  }
}

void RpmLog::write_csv_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::ConfigError, "cannot open " + path + " for writing");
  write_csv(os);
}

RpmLog RpmLog::read_csv(std::istream& is) {
  RpmLog log;
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line)) {
    throw Error(ErrorCode::MalformedLog, "line 1: empty command log");
  }
  ++line_no;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 6) {
      throw Error(ErrorCode::MalformedLog,
                  "line " + std::to_string(line_no) + ": expected 6 fields, got " +
                      std::to_string(fields.size()));
    }
    RpmSample s;
    s.t = parse_double(fields[0], line_no);
    for (int i = 0; i < 5; ++i) s.n[i] = parse_double(fields[i + 1], line_no);
    if (!log.samples.empty() && s.t <= log.samples.back().t) {
      throw Error(ErrorCode::MalformedLog,
                  "line " + std::to_string(line_no) + ": timestamps must be strictly increasing");
    }
    log.samples.push_back(s);
  }
  return log;
}

RpmLog RpmLog::read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  return read_csv(is);
}

std::string MissionMetrics::to_json() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "{\n"
     << "  \"rms_cross_track_m\": " << rms_cross_track_m << ",\n"
     << "  \"max_roll_deg\": " << max_roll_deg << ",\n"
     << "  \"duration_s\": " << duration_s << ",\n"
     << "  \"distance_m\": " << distance_m << "\n"
     << "}\n";
  return os.str();
}

namespace {

struct ChannelDef {
  const char* name;
  double (*get)(const TrajectoryRecord&);
  bool angular;
};

const std::vector<ChannelDef>& channel_defs() {
  static const std::vector<ChannelDef> defs = {
      {"u", [](const TrajectoryRecord& r) { return r.nu.u; }, false},
      {"v", [](const TrajectoryRecord& r) { return r.nu.v; }, false},
      {"w", [](const TrajectoryRecord& r) { return r.nu.w; }, false},
      {"p", [](const TrajectoryRecord& r) { return r.nu.p; }, false},
      {"q", [](const TrajectoryRecord& r) { return r.nu.q; }, false},
      {"r", [](const TrajectoryRecord& r) { return r.nu.r; }, false},
      {"z", [](const TrajectoryRecord& r) { return r.pose.z; }, false},
      {"psi", [](const TrajectoryRecord& r) { return r.pose.psi; }, true},
      {"theta", [](const TrajectoryRecord& r) { return r.pose.theta; }, true},
      {"phi", [](const TrajectoryRecord& r) { return r.pose.phi; }, true},
  };
  return defs;
}

double interp_channel(const TrajectoryLog& log, const ChannelDef& def, double t, size_t& hint) {
  const auto& rec = log.records;
  while (hint + 1 < rec.size() && rec[hint + 1].t <= t) ++hint;
  if (hint + 1 >= rec.size()) return def.get(rec.back());
  const auto& a = rec[hint];
  const auto& b = rec[hint + 1];
  const double span = b.t - a.t;
  const double alpha = span > 0.0 ? (t - a.t) / span : 0.0;
  const double va = def.get(a);
  const double vb = def.get(b);
  if (def.angular) return va + alpha * wrap_angle(vb - va);
  return va + alpha * (vb - va);
}

}  // namespace

CompareReport compare(const TrajectoryLog& sim, const TrajectoryLog& measured) {
  if (sim.records.empty() || measured.records.empty()) {
    throw Error(ErrorCode::NoOverlap, "empty trajectory log");
  }
  const double t0 = std::max(sim.records.front().t, measured.records.front().t);
  const double t1 = std::min(sim.records.back().t, measured.records.back().t);
  if (t0 > t1) throw Error(ErrorCode::NoOverlap, "logs do not overlap in time");

  CompareReport report;
  report.t_begin = t0;
  report.t_end = t1;
  for (const auto& def : channel_defs()) {
    double sum_sq = 0.0;
    double max_abs = 0.0;
    int n = 0;
    size_t hint = 0;
    for (const auto& m : measured.records) {
      if (m.t < t0 || m.t > t1) continue;
      const double s = interp_channel(sim, def, m.t, hint);
      double diff = s - def.get(m);
      if (def.angular) diff = wrap_angle(diff);
      sum_sq += diff * diff;
      max_abs = std::max(max_abs, std::abs(diff));
      ++n;
    }
    ChannelError err;
    if (n > 0) {
      err.rms = std::sqrt(sum_sq / n);
      err.max_abs = max_abs;
    }
    report.channels[def.name] = err;
    report.samples = n;
  }
  return report;
}

std::string CompareReport::text() const {
  std::ostringstream os;
  os << "channel        rms          max\n";
  for (const auto& def : channel_defs()) {
    const auto& err = channels.at(def.name);
    os << std::left << std::setw(8) << def.name << std::right << std::setw(12)
       << std::setprecision(6) << std::scientific << err.rms << " " << std::setw(12)
       << err.max_abs << "\n";
  }
  os << "samples " << samples << " over [" << std::defaultfloat << t_begin << ", " << t_end
     << "] s\n";
  return os.str();
}

std::string CompareReport::to_json() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "{\n  \"t_begin\": " << t_begin << ",\n  \"t_end\": " << t_end
     << ",\n  \"samples\": " << samples << ",\n  \"channels\": {";
  bool first = true;
  for (const auto& def : channel_defs()) {
    const auto& err = channels.at(def.name);
    os << (first ? "" : ",") << "\n    \"" << def.name << "\": {\"rms\": " << err.rms
       << ", \"max\": " << err.max_abs << "}";
    first = false;
  }
  os << "\n  }\n}\n";
  return os.str();
}

}  // namespace hauv
