#include "hauv/mission.hpp"

#include <cmath>
#include <limits>

#include "hauv/errors.hpp"

namespace hauv {

double MissionPlan::path_length() const {
  double total = 0.0;
  for (size_t i = 1; i < waypoints.size(); ++i) {
    total += (waypoints[i].ne - waypoints[i - 1].ne).norm();
  }
  return total;
}

void MissionPlan::validate() const {
  if (waypoints.size() < 2) {
    throw Error(ErrorCode::ConfigError, "mission plan needs at least two waypoints");
  }
  if (!(speed > 0.0)) throw Error(ErrorCode::ConfigError, "mission speed must be > 0");
  if (!(spacing > 0.0)) throw Error(ErrorCode::ConfigError, "transect spacing must be > 0");
}

MissionPlan plan_lawnmower(const SurveyRegion& region, double spacing, double vertical,
                           double speed, VerticalMode vmode) {
  if (!(region.length > 0.0) || !(region.width > 0.0)) {
    throw Error(ErrorCode::RegionTooSmall, "survey region has a degenerate side");
  }
  if (!(spacing > 0.0) || spacing > region.width + 1e-9) {
    throw Error(ErrorCode::RegionTooSmall, "transect spacing exceeds the region width");
  }

  const Vec2 along(std::cos(region.rotation), std::sin(region.rotation));
  const Vec2 cross(-std::sin(region.rotation), std::cos(region.rotation));

  const int lines = static_cast<int>(std::floor(region.width / spacing + 1e-9)) + 1;
  MissionPlan plan;
  plan.vertical_mode = vmode;
  plan.vertical = vertical;
  plan.speed = speed;
  plan.spacing = spacing;
  plan.waypoints.reserve(2 * lines);
  for (int i = 0; i < lines; ++i) {
    const Vec2 base = region.origin + cross * (i * spacing);
    Vec2 a = base;
    Vec2 b = base + along * region.length;
    if (i % 2 == 1) std::swap(a, b);
    plan.waypoints.push_back({a, vertical});
    plan.waypoints.push_back({b, vertical});
  }
  plan.camera.frame_rate =
      frame_rate(speed, vertical, plan.camera.overlap_target, plan.camera.max_fps).fps;
  plan.validate();
  return plan;
}

FrameRate frame_rate(double u, double altitude, double overlap, double max_fps) {
  if (!(altitude > 0.0)) throw Error(ErrorCode::ConfigError, "altitude must be > 0");
  if (overlap < 0.0 || overlap >= 1.0) {
    throw Error(ErrorCode::ConfigError, "overlap fraction outside [0, 1)");
  }
  FrameRate out;
  out.fps = u / (altitude * (1.0 - overlap));
  if (out.fps > max_fps) {
    out.fps = max_fps;
    out.clamped = true;
  }
  return out;
}

void CameraFootprint::validate() const {
  if (!(along_track > 0.0) || !(cross_track > 0.0) || !(pixel_resolution_mm > 0.0)) {
    throw Error(ErrorCode::ConfigError, "camera footprint entries must be > 0");
  }
}

OverlapReport overlap_report(const CameraFootprint& fp, const MissionPlan& plan) {
  fp.validate();
  plan.validate();
  OverlapReport out;
  const double advance = plan.camera.frame_rate > 0.0
                             ? plan.speed / plan.camera.frame_rate
                             : std::numeric_limits<double>::infinity();
  out.along_track = std::max(0.0, (fp.along_track - advance) / fp.along_track);
  out.along_gap = advance >= fp.along_track;
  out.cross_track = std::max(0.0, (fp.cross_track - plan.spacing) / fp.cross_track);
  out.cross_gap = plan.spacing >= fp.cross_track;
  return out;
}

}  // namespace hauv
