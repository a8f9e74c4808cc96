// SPDX-License-Identifier: BSD-2-Clause

#pragma once

#include <compare>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hierslam/map_model.hpp"

namespace hierslam {

using Vector6d = Eigen::Matrix<double, 6, 1>;

enum class VarKind : std::uint8_t { keyframe, marker, point, wall, room };

struct VarRef {
  VarKind kind;
  int id;
  auto operator<=>(const VarRef&) const = default;
};

/// Local-parameterization dimension: 6 for poses, 3 for points/walls/rooms.
int var_dim(VarKind kind);

enum class FactorKind : std::uint8_t {
  odometry,
  marker_obs,
  point_proj,
  marker_wall,
  room2,
  room4
};

int residual_dim(FactorKind kind);
const char* factor_kind_name(FactorKind kind);

struct Factor {
  FactorKind kind{FactorKind::odometry};
  std::vector<VarRef> vars;
  Pose measured_pose;                              // odometry / marker_obs
  Eigen::Vector2d measured_pixel{0.0, 0.0};        // point_proj
  Intrinsics intrinsics;                           // point_proj
  Eigen::Vector3d marker_center{0.0, 0.0, 0.0};    // room2
  Eigen::MatrixXd information;                     // SPD, residual_dim square
};

Eigen::MatrixXd default_information(FactorKind kind);

Factor make_odometry_factor(int kf_i, int kf_j, const Pose& z,
                            const Eigen::MatrixXd& info = {});
Factor make_marker_obs_factor(int kf, int marker, const Pose& z,
                              const Eigen::MatrixXd& info = {});
Factor make_point_proj_factor(int kf, int point, const Eigen::Vector2d& pixel,
                              const Intrinsics& intr,
                              const Eigen::MatrixXd& info = {});
Factor make_marker_wall_factor(int wall, int marker,
                               const Eigen::MatrixXd& info = {});
Factor make_room2_factor(int room, int wall_a, int wall_b,
                         const Eigen::Vector3d& marker_center,
                         const Eigen::MatrixXd& info = {});
Factor make_room4_factor(int room, int wall_xa, int wall_xb, int wall_ya,
                         int wall_yb, const Eigen::MatrixXd& info = {});

// ---- Residuals -----------------------------------------------------------

/// Relative-pose residual log(z^-1 * t_i^-1 * t_j); zero iff the measurement
/// is consistent. Shared by odometry and marker-observation factors.
Vector6d between_residual(const Pose& t_i, const Pose& t_j, const Pose& z);

/// Pinhole reprojection residual; empty when the point is at or behind the
/// camera (depth <= 1e-6), in which case the factor is skipped and flagged.
std::optional<Eigen::Vector2d> point_proj_residual(const Pose& t_kf,
                                                   const Eigen::Vector3d& x,
                                                   const Intrinsics& intr,
                                                   const Eigen::Vector2d& z);

/// Marker-to-wall residual: the two tangential components of the wall normal
/// expressed in the marker frame plus the marker-center-to-wall distance.
/// Zero iff the marker lies on the wall with its board parallel to it. The
/// wall normal is sign-aligned with the marker's +z axis per evaluation.
Eigen::Vector3d marker_wall_residual(const WallAngles& wall, const Pose& t_m);

/// Center of a two-wall room: midpoint of the walls' perpendicular feet plus
/// the marker center's components orthogonal to the shared normal. Empty when
/// the foot midpoint vanishes (walls mirror-symmetric about the origin).
/// Expects canonicalized planes.
std::optional<Eigen::Vector3d> two_wall_room_center(const Plane& wall_a,
                                                    const Plane& wall_b,
                                                    const Eigen::Vector3d& c);

/// Center of a four-wall room: sum of the per-pair foot midpoints. Empty when
/// a pair's normals are not near-parallel (within 10 degrees, sign-aligned)
/// after canonicalization.
std::optional<Eigen::Vector3d> four_wall_room_center(const Plane& wall_xa,
                                                     const Plane& wall_xb,
                                                     const Plane& wall_ya,
                                                     const Plane& wall_yb);

std::optional<Eigen::Vector3d> two_wall_room_residual(
    const Eigen::Vector3d& room_center, const WallAngles& wall_a,
    const WallAngles& wall_b, const Eigen::Vector3d& c);

std::optional<Eigen::Vector3d> four_wall_room_residual(
    const Eigen::Vector3d& room_center, const WallAngles& wall_xa,
    const WallAngles& wall_xb, const WallAngles& wall_ya,
    const WallAngles& wall_yb);

// ---- Evaluation against map states ----------------------------------------

struct FactorEval {
  bool valid{true};  // false: behind-camera or degenerate geometry, skip
  Eigen::VectorXd residual;
  std::vector<Eigen::MatrixXd> jacobians;  // per variable, residual x var_dim
};

/// Residual (and analytic Jacobians, when requested) of a factor at the
/// current map states. Jacobians are taken with respect to each variable's
/// local parameterization: right-multiplied pose tangent for keyframes and
/// markers, additive for walls, rooms, and points.
FactorEval evaluate_factor(const Factor& f, const HierMap& map,
                           bool with_jacobians);

}  // namespace hierslam
