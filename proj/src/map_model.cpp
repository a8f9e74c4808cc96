// SPDX-License-Identifier: BSD-2-Clause

#include "hierslam/map_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hierslam {

namespace {

constexpr double kParallelGate = 10.0 * EIGEN_PI / 180.0;

template <typename M>
const typename M::mapped_type& lookup(const M& store, int id, const char* what) {
  auto it = store.find(id);
  if (it == store.end()) {
    throw MapError(MapErrorCode::unknown_id,
                   std::string(what) + " id " + std::to_string(id) + " not in map");
  }
  return it->second;
}

template <typename M>
typename M::mapped_type& lookup_mut(M& store, int id, const char* what) {
  auto it = store.find(id);
  if (it == store.end()) {
    throw MapError(MapErrorCode::unknown_id,
                   std::string(what) + " id " + std::to_string(id) + " not in map");
  }
  return it->second;
}

}  // namespace

std::array<Eigen::Vector3d, 4> marker_corners(const Pose& pose, double size) {
  const double h = size / 2.0;
  const std::array<Eigen::Vector3d, 4> local = {
      Eigen::Vector3d(-h, -h, 0), Eigen::Vector3d(h, -h, 0),
      Eigen::Vector3d(h, h, 0), Eigen::Vector3d(-h, h, 0)};
  std::array<Eigen::Vector3d, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = pose * local[i];
  return out;
}

void HierMap::add_keyframe(const Keyframe& kf) {
  if (keyframes_.count(kf.id)) {
    throw MapError(MapErrorCode::duplicate_id,
                   "keyframe id " + std::to_string(kf.id) + " already present");
  }
  if (kf.intrinsics.fx <= 0 || kf.intrinsics.fy <= 0) {
    throw MapError(MapErrorCode::invalid_entity, "keyframe focal lengths must be positive");
  }
  if (!keyframes_.empty()) {
    const Keyframe& last = keyframes_.rbegin()->second;
    if (kf.id < last.id || kf.timestamp <= last.timestamp) {
      throw MapError(MapErrorCode::invalid_entity,
                     "keyframe ids/timestamps must be strictly increasing");
    }
  }
  keyframes_.emplace(kf.id, kf);
}

void HierMap::add_point(const MapPoint& p) {
  if (points_.count(p.id)) {
    throw MapError(MapErrorCode::duplicate_id,
                   "point id " + std::to_string(p.id) + " already present");
  }
  if (!p.position.allFinite()) {
    throw MapError(MapErrorCode::invalid_entity, "point position must be finite");
  }
  const double vn = p.viewing_direction.norm();
  if (vn != 0.0 && std::abs(vn - 1.0) > 1e-6) {
    throw MapError(MapErrorCode::invalid_entity, "viewing direction must be unit when set");
  }
  points_.emplace(p.id, p);
}

void HierMap::add_marker(Marker m) {
  if (markers_.count(m.id)) {
    throw MapError(MapErrorCode::duplicate_id,
                   "marker id " + std::to_string(m.id) + " already present");
  }
  if (m.size <= 0) {
    throw MapError(MapErrorCode::invalid_entity, "marker size must be positive");
  }
  m.corners = marker_corners(m.pose, m.size);
  markers_.emplace(m.id, std::move(m));
}

void HierMap::add_wall(const Wall& w) {
  if (walls_.count(w.id)) {
    throw MapError(MapErrorCode::duplicate_id,
                   "wall id " + std::to_string(w.id) + " already present");
  }
  if (w.attached_markers.empty()) {
    throw MapError(MapErrorCode::invalid_entity, "wall must reference at least one marker");
  }
  std::set<int> seen;
  for (int mid : w.attached_markers) {
    if (!markers_.count(mid)) {
      throw MapError(MapErrorCode::dangling_reference,
                     "wall references unknown marker id " + std::to_string(mid));
    }
    if (!seen.insert(mid).second) {
      throw MapError(MapErrorCode::invalid_entity,
                     "wall lists marker id " + std::to_string(mid) + " twice");
    }
  }
  walls_.emplace(w.id, w);
}

void HierMap::add_room(const Room& r) {
  if (rooms_.count(r.id)) {
    throw MapError(MapErrorCode::duplicate_id,
                   "room id " + std::to_string(r.id) + " already present");
  }
  const std::size_t expected = r.kind == RoomKind::two_wall ? 2 : 4;
  if (r.walls.size() != expected) {
    throw MapError(MapErrorCode::invalid_entity, "room wall count does not match kind");
  }
  for (int wid : r.walls) {
    if (!walls_.count(wid)) {
      throw MapError(MapErrorCode::dangling_reference,
                     "room references unknown wall id " + std::to_string(wid));
    }
  }
  if (r.kind == RoomKind::two_wall) {
    const Plane a = angles_to_plane(walls_.at(r.walls[0]).state);
    const Plane b = angles_to_plane(walls_.at(r.walls[1]).state);
    if (plane_normal_angle(a, b) > kParallelGate) {
      throw MapError(MapErrorCode::invalid_entity,
                     "two-wall room walls are not near-parallel");
    }
  }
  rooms_.emplace(r.id, r);
}

const Keyframe& HierMap::keyframe(int id) const { return lookup(keyframes_, id, "keyframe"); }
const MapPoint& HierMap::point(int id) const { return lookup(points_, id, "point"); }
const Marker& HierMap::marker(int id) const { return lookup(markers_, id, "marker"); }
const Wall& HierMap::wall(int id) const { return lookup(walls_, id, "wall"); }
const Room& HierMap::room(int id) const { return lookup(rooms_, id, "room"); }

void HierMap::set_keyframe_pose(int id, const Pose& pose) {
  lookup_mut(keyframes_, id, "keyframe").pose = pose;
}

void HierMap::set_point_position(int id, const Eigen::Vector3d& x) {
  lookup_mut(points_, id, "point").position = x;
}

void HierMap::set_marker_pose(int id, const Pose& pose) {
  Marker& m = lookup_mut(markers_, id, "marker");
  m.pose = pose;
  m.corners = marker_corners(m.pose, m.size);
}

void HierMap::set_wall_state(int id, const WallAngles& state) {
  lookup_mut(walls_, id, "wall").state = state;
}

void HierMap::set_room_center(int id, const Eigen::Vector3d& c) {
  lookup_mut(rooms_, id, "room").center = c;
}

void HierMap::attach_marker_to_wall(int wall_id, int marker_id) {
  Wall& w = lookup_mut(walls_, wall_id, "wall");
  if (!markers_.count(marker_id)) {
    throw MapError(MapErrorCode::dangling_reference,
                   "cannot attach unknown marker id " + std::to_string(marker_id));
  }
  if (std::find(w.attached_markers.begin(), w.attached_markers.end(), marker_id) !=
      w.attached_markers.end()) {
    throw MapError(MapErrorCode::invalid_entity,
                   "marker id " + std::to_string(marker_id) + " already attached");
  }
  w.attached_markers.push_back(marker_id);
}

std::vector<std::string> HierMap::audit() const {
  std::vector<std::string> violations;
  auto report = [&](const std::string& s) { violations.push_back(s); };

  for (const auto& [id, kf] : keyframes_) {
    if (std::abs(kf.pose.rotation.norm() - 1.0) > 1e-9) {
      report("keyframe " + std::to_string(id) + " quaternion not unit");
    }
  }
  for (const auto& [id, m] : markers_) {
    const auto expected = marker_corners(m);
    for (int i = 0; i < 4; ++i) {
      if ((expected[i] - m.corners[i]).norm() > 1e-9) {
        report("marker " + std::to_string(id) + " corners inconsistent with pose/size");
        break;
      }
    }
  }
  std::set<int> attached;
  for (const auto& [id, w] : walls_) {
    if (w.attached_markers.empty()) {
      report("wall " + std::to_string(id) + " has no markers");
    }
    std::set<int> local;
    for (int mid : w.attached_markers) {
      if (!markers_.count(mid)) {
        report("wall " + std::to_string(id) + " references missing marker " +
               std::to_string(mid));
      }
      if (!local.insert(mid).second) {
        report("wall " + std::to_string(id) + " lists marker " + std::to_string(mid) +
               " twice");
      }
      if (!attached.insert(mid).second) {
        report("marker " + std::to_string(mid) + " attached to more than one wall");
      }
    }
  }
  for (const auto& [id, r] : rooms_) {
    const std::size_t expected = r.kind == RoomKind::two_wall ? 2 : 4;
    if (r.walls.size() != expected) {
      report("room " + std::to_string(id) + " wall count does not match kind");
    }
    for (int wid : r.walls) {
      if (!walls_.count(wid)) {
        report("room " + std::to_string(id) + " references missing wall " +
               std::to_string(wid));
      }
    }
    if (r.kind == RoomKind::two_wall && r.walls.size() == 2 &&
        walls_.count(r.walls[0]) && walls_.count(r.walls[1])) {
      const Plane a = angles_to_plane(walls_.at(r.walls[0]).state);
      const Plane b = angles_to_plane(walls_.at(r.walls[1]).state);
      if (plane_normal_angle(a, b) > kParallelGate) {
        report("room " + std::to_string(id) + " two-wall pair not near-parallel");
      }
    }
  }
  return violations;
}

}  // namespace hierslam
