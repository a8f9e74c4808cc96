// SPDX-License-Identifier: BSD-2-Clause

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>

namespace hierslam {

template <typename S>
using Vector3 = Eigen::Matrix<S, 3, 1>;
template <typename S>
using Vector6 = Eigen::Matrix<S, 6, 1>;
template <typename S>
using Matrix3 = Eigen::Matrix<S, 3, 3>;

/// Rigid transform in 3D. Rotation is stored as a unit quaternion kept with
/// w >= 0 so that pose comparison is well-defined.
template <typename S>
struct PoseT {
  Eigen::Quaternion<S> rotation{Eigen::Quaternion<S>::Identity()};
  Vector3<S> translation{Vector3<S>::Zero()};

  PoseT() = default;
  PoseT(const Eigen::Quaternion<S>& q, const Vector3<S>& t)
      : rotation(q), translation(t) {
    renormalize();
  }

  static PoseT identity() { return PoseT(); }

  void renormalize() {
    rotation.normalize();
    if (rotation.w() < S(0)) rotation.coeffs() = -rotation.coeffs();
  }

  PoseT inverse() const {
    const Eigen::Quaternion<S> qi = rotation.conjugate();
    return PoseT(qi, qi * (-translation));
  }

  PoseT operator*(const PoseT& other) const {
    return PoseT(rotation * other.rotation,
                 translation + rotation * other.translation);
  }

  Vector3<S> operator*(const Vector3<S>& p) const {
    return rotation * p + translation;
  }
};

using Pose = PoseT<double>;

/// Infinite plane in Hessian normal form, convention n.p + d = 0.
template <typename S>
struct PlaneT {
  Vector3<S> normal{Vector3<S>::UnitZ()};
  S d{0};
};

using Plane = PlaneT<double>;

/// Wall state as optimized in the graph: spherical angles of the unit normal
/// plus the plane offset. azimuth in (-pi, pi], elevation in [-pi/2, pi/2].
template <typename S>
struct WallAnglesT {
  S azimuth{0};
  S elevation{0};
  S d{0};
};

using WallAngles = WallAnglesT<double>;

template <typename S>
Matrix3<S> skew(const Vector3<S>& v) {
  Matrix3<S> m;
  m << S(0), -v.z(), v.y(), v.z(), S(0), -v.x(), -v.y(), v.x(), S(0);
  return m;
}

template <typename S>
Eigen::Quaternion<S> so3_exp(const Vector3<S>& w) {
  const S theta = w.norm();
  if (theta < S(1e-9)) {
    Eigen::Quaternion<S> q(S(1), w.x() / S(2), w.y() / S(2), w.z() / S(2));
    q.normalize();
    return q;
  }
  const S half = theta / S(2);
  const S scale = std::sin(half) / theta;
  return Eigen::Quaternion<S>(std::cos(half), scale * w.x(), scale * w.y(),
                              scale * w.z());
}

/// Quaternion-based rotation log; stable for all angles in [0, pi], including
/// the branch near pi where the matrix-trace form degrades.
template <typename S>
Vector3<S> so3_log(const Eigen::Quaternion<S>& q_in) {
  Eigen::Quaternion<S> q = q_in.normalized();
  if (q.w() < S(0)) q.coeffs() = -q.coeffs();
  const S sin_half = q.vec().norm();
  if (sin_half < S(1e-9)) {
    return (S(2) / q.w()) * q.vec();
  }
  const S angle = S(2) * std::atan2(sin_half, q.w());
  return (angle / sin_half) * q.vec();
}

/// Inverse of the SO(3) right Jacobian, used when linearizing log-residuals.
template <typename S>
Matrix3<S> so3_right_jacobian_inverse(const Vector3<S>& phi) {
  const S theta2 = phi.squaredNorm();
  const Matrix3<S> w = skew(phi);
  S coeff;
  if (theta2 < S(1e-8)) {
    coeff = S(1) / S(12) + theta2 / S(720);
  } else {
    const S theta = std::sqrt(theta2);
    const S half = theta / S(2);
    coeff = S(1) / theta2 - std::cos(half) / (S(2) * theta * std::sin(half));
  }
  return Matrix3<S>::Identity() + w / S(2) + coeff * (w * w);
}

/// Tangent convention: rotation first, translation second. Translation is
/// carried directly (product manifold SO(3) x R^3), so exp((0,0,0,t)) moves
/// by t with identity rotation.
template <typename S>
PoseT<S> pose_exp(const Vector6<S>& v) {
  return PoseT<S>(so3_exp<S>(v.template head<3>()), v.template tail<3>());
}

template <typename S>
Vector6<S> pose_log(const PoseT<S>& t) {
  Vector6<S> v;
  v.template head<3>() = so3_log(t.rotation);
  v.template tail<3>() = t.translation;
  return v;
}

template <typename S>
S rotation_angle(const PoseT<S>& t) {
  return so3_log(t.rotation).norm();
}

template <typename S>
S wrap_angle(S a) {
  a = std::remainder(a, S(2) * S(EIGEN_PI));
  if (a <= -S(EIGEN_PI)) a += S(2) * S(EIGEN_PI);
  return a;
}

template <typename S>
PlaneT<S> angles_to_plane(const WallAnglesT<S>& a) {
  const S ct = std::cos(a.elevation);
  PlaneT<S> q;
  q.normal = Vector3<S>(ct * std::cos(a.azimuth), ct * std::sin(a.azimuth),
                        std::sin(a.elevation));
  q.d = a.d;
  return q;
}

/// Inverse of angles_to_plane away from the elevation poles. At the poles
/// (normal = +-z) the azimuth is singular and reported as 0.
template <typename S>
WallAnglesT<S> plane_to_angles(const PlaneT<S>& q) {
  WallAnglesT<S> a;
  if (q.normal.x() == S(0) && q.normal.y() == S(0)) {
    a.azimuth = S(0);
  } else {
    a.azimuth = std::atan2(q.normal.y(), q.normal.x());
    if (a.azimuth <= -S(EIGEN_PI)) a.azimuth += S(2) * S(EIGEN_PI);
  }
  const S nz = std::clamp(q.normal.z(), S(-1), S(1));
  a.elevation = std::asin(nz);
  a.d = q.d;
  return a;
}

/// Re-expresses a plane in the frame whose pose (in the plane's frame) is t.
/// Points p on the plane satisfy n'.p' + d' = 0 after p' = t^-1 * p.
template <typename S>
PlaneT<S> transform_plane(const PoseT<S>& t, const PlaneT<S>& q) {
  PlaneT<S> out;
  out.normal = t.rotation.conjugate() * q.normal;
  out.d = q.d + q.normal.dot(t.translation);
  return out;
}

/// Plane spanned by a marker board: normal is the marker's local +z axis,
/// sign preserved (carries the facing direction), not canonicalized.
template <typename S>
PlaneT<S> plane_from_marker(const PoseT<S>& marker_pose) {
  PlaneT<S> q;
  q.normal = marker_pose.rotation * Vector3<S>::UnitZ();
  q.d = -q.normal.dot(marker_pose.translation);
  return q;
}

/// Canonical form: d <= 0 (normal points from the origin toward the plane);
/// planes through the origin break the tie on the first nonzero normal
/// component.
template <typename S>
PlaneT<S> canonicalize_plane(const PlaneT<S>& q) {
  bool flip = false;
  if (q.d > S(0)) {
    flip = true;
  } else if (q.d == S(0)) {
    for (int i = 0; i < 3; ++i) {
      if (q.normal[i] != S(0)) {
        flip = q.normal[i] < S(0);
        break;
      }
    }
  }
  if (!flip) return q;
  return PlaneT<S>{-q.normal, -q.d};
}

/// Foot of the perpendicular from the origin onto the plane. Invariant under
/// the (n,d) -> (-n,-d) sign flip.
template <typename S>
Vector3<S> plane_foot(const PlaneT<S>& q) {
  return -q.d * q.normal;
}

template <typename S>
S signed_point_plane_distance(const PlaneT<S>& q, const Vector3<S>& p) {
  return q.normal.dot(p) + q.d;
}

/// Angle between plane normals ignoring orientation (sign-aligned).
template <typename S>
S plane_normal_angle(const PlaneT<S>& a, const PlaneT<S>& b) {
  const S c = std::clamp(std::abs(a.normal.dot(b.normal)), S(0), S(1));
  return std::acos(c);
}

}  // namespace hierslam
