#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace planbench {

struct Sphere {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double radius = 0.0;
};

// Signed distance between sphere surfaces; negative when they overlap.
inline double surface_distance(const Sphere& a, const Sphere& b) {
  return (a.center - b.center).norm() - a.radius - b.radius;
}

// Fixed-axis roll-pitch-yaw (URDF convention): R = Rz(yaw) * Ry(pitch) * Rx(roll).
inline Eigen::Matrix3d rotation_from_rpy(const Eigen::Vector3d& rpy) {
  return (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

inline bool is_rotation(const Eigen::Matrix3d& m, double tol = 1e-9) {
  return (m * m.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(m.determinant() - 1.0) <= tol;
}

}  // namespace planbench
