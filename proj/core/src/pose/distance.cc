// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/pose/distance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include <Eigen/Geometry>

#include "posediv/error.h"

namespace posediv {
namespace {

constexpr int kFallbackYawSteps = 720;

double Cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

struct ViewMatch {
  Pose2D projected;
  double distance;
};

ViewMatch MatchInView(const SourceView& anchor, const Pose3D& other,
                      const MetricContext& ctx) {
  const Skeleton& sk = ctx.skeleton;
  const double up_norm = ctx.up.norm();
  if (!(up_norm > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "up vector must be nonzero");
  }
  const Eigen::Vector3d u = ctx.up / up_norm;
  const Eigen::Matrix3d rot = CameraRotation(anchor.camera);

  // Weak perspective is affine, so candidate size only matters through the
  // sign of the mean depth. Shrink the candidate to fit well in front of the
  // camera; this keeps the result independent of candidate scale. Pinhole
  // projection keeps the candidate's metric size.
  Pose3D sized = other;
  if (ctx.projection.mode == ProjectionMode::kWeakPerspective) {
    const Eigen::RowVector3d root = other.joint(sk.root).transpose();
    const Pose3D::Matrix offsets = other.joints().rowwise() - root;
    const double reach = offsets.rowwise().norm().maxCoeff();
    const double cam_dist = (anchor.camera.look_at - anchor.camera.position).norm();
    if (reach > 0.0 && cam_dist > 0.0) {
      const Pose3D::Matrix scaled = offsets * (0.5 * cam_dist / reach);
      sized = Pose3D(scaled.rowwise() + root);
    }
  }
  const Pose3D placed =
      Translate(sized, anchor.camera.look_at - other.joint(sk.root));

  const Eigen::Vector3d n = other.joint(sk.nose) - other.joint(sk.neck);
  const Eigen::Vector3d n_vert = n.dot(u) * u;
  const Eigen::Vector3d n_horiz = n - n_vert;
  if (!(n_horiz.norm() > 1e-12 * n.norm())) {
    throw Error(ErrorCode::kUndefinedFacing,
                "candidate neck-to-nose vector is vertical; facing undefined");
  }
  const Eigen::Vector2d w = anchor.pose.joint(sk.nose) - anchor.pose.joint(sk.neck);
  if (!(w.norm() > 0.0)) {
    throw Error(ErrorCode::kUndefinedFacing,
                "2D anchor has coincident nose and neck; facing undefined");
  }

  // Orthographic image direction (y down) of a world vector.
  auto image_dir = [&rot](const Eigen::Vector3d& v) {
    return Eigen::Vector2d(rot.row(0).dot(v), -rot.row(1).dot(v));
  };
  const Eigen::Vector2d a_vec = image_dir(n_vert);
  const Eigen::Vector2d b_vec = image_dir(n_horiz);
  const Eigen::Vector2d c_vec = image_dir(u.cross(n_horiz));
  auto projected_dir = [&](double t) {
    return Eigen::Vector2d(a_vec + std::cos(t) * b_vec + std::sin(t) * c_vec);
  };

  std::vector<double> yaws;
  const double a = Cross2(w, a_vec);
  const double b = Cross2(w, b_vec);
  const double c = Cross2(w, c_vec);
  const double r = std::hypot(b, c);
  if (r > 0.0 && std::abs(a) <= r) {
    const double phi = std::atan2(c, b);
    const double delta = std::acos(std::clamp(-a / r, -1.0, 1.0));
    for (double t : {phi + delta, phi - delta}) {
      if (w.dot(projected_dir(t)) > 0.0 &&
          std::find(yaws.begin(), yaws.end(), t) == yaws.end()) {
        yaws.push_back(t);
      }
    }
  }
  if (ctx.projection.mode == ProjectionMode::kPinhole) {
    // Perspective bends the image direction, so match the true projection:
    // bracket sign changes of cross(w, dir(t)) and bisect.
    const Eigen::Vector3d root = placed.joint(sk.root);
    const Eigen::Vector3d neck = placed.joint(sk.neck) - root;
    const Eigen::Vector3d nose = placed.joint(sk.nose) - root;
    auto pinhole_dir = [&](double t) -> std::optional<Eigen::Vector2d> {
      const Eigen::AngleAxisd turn(t, u);
      const Eigen::Vector3d pn =
          rot * (root + turn * neck - anchor.camera.position);
      const Eigen::Vector3d pz =
          rot * (root + turn * nose - anchor.camera.position);
      if (!(pn.z() > 0.0) || !(pz.z() > 0.0)) return std::nullopt;
      return Eigen::Vector2d(pz.x() / pz.z() - pn.x() / pn.z(),
                             -(pz.y() / pz.z() - pn.y() / pn.z()));
    };
    auto cross_at = [&](double t) -> std::optional<double> {
      const auto v = pinhole_dir(t);
      if (!v) return std::nullopt;
      return Cross2(w, *v);
    };
    yaws.clear();
    const double step = 2.0 * std::numbers::pi / kFallbackYawSteps;
    for (int i = 0; i < kFallbackYawSteps; ++i) {
      double lo = i * step;
      double hi = lo + step;
      auto flo = cross_at(lo);
      auto fhi = cross_at(hi);
      if (!flo || !fhi || (*flo > 0.0) == (*fhi > 0.0)) continue;
      for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto fm = cross_at(mid);
        if (!fm) break;
        if ((*fm > 0.0) == (*flo > 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double t = 0.5 * (lo + hi);
      const auto v = pinhole_dir(t);
      if (v && w.dot(*v) > 0.0) yaws.push_back(t);
    }
  }
  if (yaws.empty()) {
    double best_score = -std::numeric_limits<double>::infinity();
    double best_t = 0.0;
    for (int i = 0; i < kFallbackYawSteps; ++i) {
      const double t = 2.0 * std::numbers::pi * i / kFallbackYawSteps;
      const Eigen::Vector2d v = projected_dir(t);
      const double vn = v.norm();
      if (!(vn > 0.0)) continue;
      const double score = w.dot(v) / vn;
      if (score > best_score) {
        best_score = score;
        best_t = t;
      }
    }
    // Refine the grid optimum so the result does not depend on where the
    // grid falls relative to the candidate's facing: bisect on the sign of
    // the score's derivative, (w.v')|v|^2 - (w.v)(v.v').
    auto slope = [&](double t) {
      const Eigen::Vector2d v = projected_dir(t);
      const Eigen::Vector2d dv = -std::sin(t) * b_vec + std::cos(t) * c_vec;
      return w.dot(dv) * v.squaredNorm() - w.dot(v) * v.dot(dv);
    };
    const double step = 2.0 * std::numbers::pi / kFallbackYawSteps;
    double lo = best_t - step;
    double hi = best_t + step;
    if (slope(lo) > 0.0 && slope(hi) < 0.0) {
      for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? lo : hi) = mid;
      }
      best_t = 0.5 * (lo + hi);
    }
    yaws.push_back(best_t);
  }

  const PoseVector<2> anchor_vec = NormalizePoseVector(anchor.pose, sk);
  std::optional<ViewMatch> best;
  for (double t : yaws) {
    const Pose3D turned = RotateAboutUp(placed, sk, u, t);
    Pose2D projected = ProjectTo2D(TransformToCamera(turned, anchor.camera),
                                   ctx.projection);
    const double d = DistanceBetweenUnitVectors(
        anchor_vec, NormalizePoseVector(projected, sk));
    if (!best || d < best->distance) {
      best.emplace(ViewMatch{std::move(projected), d});
    }
  }
  return *best;
}

}  // namespace

double PoseDistance(const Pose3D& anchor, const Pose3D& other,
                    const MetricContext& ctx) {
  const Pose3D aligned = AlignFacing(other, anchor, ctx.skeleton, ctx.up);
  return DistanceBetweenUnitVectors(NormalizePoseVector(anchor, ctx.skeleton),
                                    NormalizePoseVector(aligned, ctx.skeleton));
}

double PoseDistance(const Pose2D& anchor, const Pose2D& other,
                    const MetricContext& ctx) {
  return DistanceBetweenUnitVectors(NormalizePoseVector(anchor, ctx.skeleton),
                                    NormalizePoseVector(other, ctx.skeleton));
}

double PoseDistance(const SourceView& anchor, const Pose3D& other,
                    const MetricContext& ctx) {
  return MatchInView(anchor, other, ctx).distance;
}

Pose2D ProjectIntoView(const SourceView& anchor, const Pose3D& other,
                       const MetricContext& ctx) {
  return MatchInView(anchor, other, ctx).projected;
}

}  // namespace posediv
