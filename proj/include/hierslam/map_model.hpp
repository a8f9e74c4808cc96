// SPDX-License-Identifier: BSD-2-Clause

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hierslam/errors.hpp"
#include "hierslam/geometry.hpp"

namespace hierslam {

struct Intrinsics {
  double fx{460.0};
  double fy{460.0};
  double cx{320.0};
  double cy{240.0};
};

struct Keyframe {
  int id{0};
  double timestamp{0.0};
  Pose pose;  // camera-in-global
  Intrinsics intrinsics;
};

struct MapPoint {
  int id{0};
  Eigen::Vector3d position{Eigen::Vector3d::Zero()};
  Eigen::Vector3d viewing_direction{Eigen::Vector3d::Zero()};  // unit when set
  std::vector<std::uint8_t> descriptor;  // opaque, never matched here
};

struct Marker {
  int id{0};
  double size{0.17};  // side length, meters
  Pose pose;          // marker-in-global
  std::array<Eigen::Vector3d, 4> corners{};  // derived from pose and size
};

struct Wall {
  int id{0};
  WallAngles state;
  std::vector<int> attached_markers;
};

enum class RoomKind { two_wall, four_wall };

struct Room {
  int id{0};
  RoomKind kind{RoomKind::two_wall};
  Eigen::Vector3d center{Eigen::Vector3d::Zero()};
  std::vector<int> walls;
};

/// Local marker corners are (-s/2,-s/2,0), (s/2,-s/2,0), (s/2,s/2,0),
/// (-s/2,s/2,0) in that fixed order (counter-clockwise seen from +z).
std::array<Eigen::Vector3d, 4> marker_corners(const Pose& pose, double size);
inline std::array<Eigen::Vector3d, 4> marker_corners(const Marker& m) {
  return marker_corners(m.pose, m.size);
}

/// The layered map E = {keyframes, points, markers, walls, rooms}. Inserts
/// enforce referential integrity; walls and rooms referencing missing
/// entities are rejected.
class HierMap {
 public:
  void add_keyframe(const Keyframe& kf);
  void add_point(const MapPoint& p);
  void add_marker(Marker m);  // fills in corners
  void add_wall(const Wall& w);
  void add_room(const Room& r);

  bool has_keyframe(int id) const { return keyframes_.count(id) > 0; }
  bool has_point(int id) const { return points_.count(id) > 0; }
  bool has_marker(int id) const { return markers_.count(id) > 0; }
  bool has_wall(int id) const { return walls_.count(id) > 0; }
  bool has_room(int id) const { return rooms_.count(id) > 0; }

  const Keyframe& keyframe(int id) const;
  const MapPoint& point(int id) const;
  const Marker& marker(int id) const;
  const Wall& wall(int id) const;
  const Room& room(int id) const;

  void set_keyframe_pose(int id, const Pose& pose);
  void set_point_position(int id, const Eigen::Vector3d& x);
  void set_marker_pose(int id, const Pose& pose);  // refreshes corners
  void set_wall_state(int id, const WallAngles& state);
  void set_room_center(int id, const Eigen::Vector3d& c);

  void attach_marker_to_wall(int wall_id, int marker_id);

  const std::map<int, Keyframe>& keyframes() const { return keyframes_; }
  const std::map<int, MapPoint>& points() const { return points_; }
  const std::map<int, Marker>& markers() const { return markers_; }
  const std::map<int, Wall>& walls() const { return walls_; }
  const std::map<int, Room>& rooms() const { return rooms_; }

  /// Full-map integrity audit; returns one line per violation, empty when
  /// the map is consistent.
  std::vector<std::string> audit() const;

 private:
  std::map<int, Keyframe> keyframes_;
  std::map<int, MapPoint> points_;
  std::map<int, Marker> markers_;
  std::map<int, Wall> walls_;
  std::map<int, Room> rooms_;
};

}  // namespace hierslam
