#pragma once

#include <string>
#include <vector>

#include "hauv/guidance.hpp"
#include "hauv/types.hpp"

namespace hauv {

// Rectangular survey region: origin corner plus side lengths, rotated so the
// long axis points along `rotation` (NED heading of the transect direction).
struct SurveyRegion {
  Vec2 origin = Vec2::Zero();  // (north, east) [m]
  double length = 17.0;        // transect axis side [m]
  double width = 15.0;         // cross axis side [m]
  double rotation = 0.0;       // transect heading [rad]
};

struct CameraSettings {
  double frame_rate = 0.25;      // [fps]
  double max_fps = 10.0;         // trigger-hardware ceiling
  double exposure_ms = 3.0;
  std::string aperture = "F/4.0";
  double focus_distance_m = 2.0;
  double overlap_target = 0.60;  // along-track fraction
};

struct MissionPlan {
  std::vector<Waypoint> waypoints;
  VerticalMode vertical_mode = VerticalMode::altitude;
  double vertical = 2.0;   // altitude above seabed or depth [m]
  double speed = 0.2;      // transect speed [m/s]
  double spacing = 1.0;    // transect spacing [m]
  CameraSettings camera;

  double path_length() const;
  void validate() const;  // >= 2 waypoints, speed > 0, spacing > 0
};

// Boustrophedon coverage of the region: floor(width / spacing) + 1 transects
// parallel to the long axis, alternating direction. Throws RegionTooSmall
// when the spacing exceeds the short side or a side is degenerate.
MissionPlan plan_lawnmower(const SurveyRegion& region, double spacing, double vertical,
                           double speed, VerticalMode vmode = VerticalMode::altitude);

struct FrameRate {
  double fps = 0.0;
  bool clamped = false;  // demand hit the hardware ceiling
};

// Frame rate giving the requested along-track overlap at speed u and
// altitude H, clamped to the hardware maximum.
FrameRate frame_rate(double u, double altitude, double overlap, double max_fps = 10.0);

struct CameraFootprint {
  double along_track = 1.16;       // [m] at the reference altitude
  double cross_track = 1.4;        // [m]
  double pixel_resolution_mm = 0.45;

  void validate() const;
};

struct OverlapReport {
  double along_track = 0.0;  // fraction of the footprint shared between frames
  double cross_track = 0.0;  // fraction shared between adjacent transects
  bool along_gap = false;    // consecutive frames do not touch
  bool cross_gap = false;    // adjacent transects do not touch
};

// Coverage check of the planned cadence and spacing against the camera
// footprint; a consistency report, not a controller input.
OverlapReport overlap_report(const CameraFootprint& footprint, const MissionPlan& plan);

}  // namespace hauv
