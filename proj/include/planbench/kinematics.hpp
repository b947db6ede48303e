#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "planbench/errors.hpp"
#include "planbench/geometry.hpp"

namespace planbench {

enum class JointKind { kRevolute, kPrismatic, kFixed };

inline const char* to_string(JointKind k) {
  switch (k) {
    case JointKind::kRevolute: return "revolute";
    case JointKind::kPrismatic: return "prismatic";
    case JointKind::kFixed: return "fixed";
  }
  return "?";
}

struct JointSpec {
  std::string name;
  JointKind kind = JointKind::kRevolute;
  // Motion axis expressed in the joint frame (after the origin transform),
  // URDF convention. Must be unit length for non-fixed joints.
  Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
  Eigen::Vector3d origin_xyz = Eigen::Vector3d::Zero();
  Eigen::Vector3d origin_rpy = Eigen::Vector3d::Zero();
  double position_lower = -1e9;
  double position_upper = 1e9;
  double velocity_limit = 1e9;
  double acceleration_limit = 1e9;
};

struct CollisionSphereSpec {
  std::string link;
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();  // in link frame
  double radius = 0.0;
};

struct Pose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity();
};

// Serial kinematic chain. Link i is connected to link i+1 by joint i, so a
// chain with m joints has m+1 link frames; frame 0 is the world-fixed root.
// Instances are immutable after construction and safe to share across threads.
class KinematicChain {
 public:
  KinematicChain(std::string root_link, std::vector<JointSpec> joints,
                 std::vector<std::string> child_links,
                 std::vector<CollisionSphereSpec> collision_spheres, std::string tip_link)
      : joints_(std::move(joints)), collision_spheres_(std::move(collision_spheres)),
        tip_link_(std::move(tip_link)) {
    links_.reserve(child_links.size() + 1);
    links_.push_back(std::move(root_link));
    for (auto& l : child_links) links_.push_back(std::move(l));
    validate();
    for (std::size_t i = 0; i < joints_.size(); ++i) {
      if (joints_[i].kind != JointKind::kFixed) actuated_.push_back(static_cast<int>(i));
    }
  }

  int dof() const { return static_cast<int>(actuated_.size()); }
  const std::vector<JointSpec>& joints() const { return joints_; }
  const std::vector<std::string>& links() const { return links_; }
  const std::vector<CollisionSphereSpec>& collision_spheres() const { return collision_spheres_; }
  const std::string& tip_link() const { return tip_link_; }

  // Indices of the non-fixed joints, in chain order.
  const std::vector<int>& actuated_joints() const { return actuated_; }

  const JointSpec& actuated_joint(int i) const { return joints_[actuated_[i]]; }

  int link_index(const std::string& name) const {
    auto it = std::find(links_.begin(), links_.end(), name);
    if (it == links_.end()) throw InputError("unknown link '" + name + "'");
    return static_cast<int>(it - links_.begin());
  }

  // World pose of every link frame, root first.
  std::vector<Pose> forward_kinematics(const Eigen::VectorXd& q) const {
    check_dof(q);
    std::vector<Pose> poses(links_.size());
    Eigen::Isometry3d world = Eigen::Isometry3d::Identity();
    poses[0] = Pose{world.translation(), world.rotation()};
    int qi = 0;
    for (std::size_t i = 0; i < joints_.size(); ++i) {
      world = world * joint_transform(joints_[i], joints_[i].kind == JointKind::kFixed
                                                      ? 0.0
                                                      : q[qi++]);
      poses[i + 1] = Pose{world.translation(), Eigen::Matrix3d(world.rotation())};
    }
    return poses;
  }

  Pose link_pose(const Eigen::VectorXd& q, const std::string& link) const {
    return forward_kinematics(q)[static_cast<std::size_t>(link_index(link))];
  }

  // Jacobian of the world position of `offset` (expressed in `link`'s frame)
  // with respect to the actuated joint values. Columns of joints distal to
  // `link` are exactly zero.
  Eigen::Matrix3Xd positional_jacobian(const Eigen::VectorXd& q, const std::string& link,
                                       const Eigen::Vector3d& offset) const {
    check_dof(q);
    const int target = link_index(link);
    const std::vector<Pose> poses = forward_kinematics(q);
    const Eigen::Vector3d point =
        poses[target].position + poses[target].orientation * offset;

    Eigen::Matrix3Xd jac = Eigen::Matrix3Xd::Zero(3, dof());
    for (int col = 0; col < dof(); ++col) {
      const int ji = actuated_[col];
      if (ji + 1 > target) continue;  // joint is distal to the queried link
      const JointSpec& joint = joints_[ji];
      // Joint frame = parent pose composed with the joint origin.
      const Eigen::Matrix3d joint_rot =
          poses[ji].orientation * rotation_from_rpy(joint.origin_rpy);
      const Eigen::Vector3d axis_world = joint_rot * joint.axis;
      if (joint.kind == JointKind::kPrismatic) {
        jac.col(col) = axis_world;
      } else {
        const Eigen::Vector3d joint_origin =
            poses[ji].position + poses[ji].orientation * joint.origin_xyz;
        jac.col(col) = axis_world.cross(point - joint_origin);
      }
    }
    return jac;
  }

  // Collision spheres placed in the world frame, in declaration order.
  std::vector<Sphere> collision_sphere_centers(const Eigen::VectorXd& q) const {
    const std::vector<Pose> poses = forward_kinematics(q);
    std::vector<Sphere> out;
    out.reserve(collision_spheres_.size());
    for (const auto& s : collision_spheres_) {
      const Pose& pose = poses[static_cast<std::size_t>(link_index(s.link))];
      out.push_back(Sphere{pose.position + pose.orientation * s.offset, s.radius});
    }
    return out;
  }

 private:
  static Eigen::Isometry3d joint_transform(const JointSpec& joint, double value) {
    Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
    t.translation() = joint.origin_xyz;
    t.linear() = rotation_from_rpy(joint.origin_rpy);
    switch (joint.kind) {
      case JointKind::kRevolute:
        t = t * Eigen::AngleAxisd(value, joint.axis);
        break;
      case JointKind::kPrismatic:
        t = t * Eigen::Translation3d(value * joint.axis);
        break;
      case JointKind::kFixed:
        break;
    }
    return t;
  }

  void check_dof(const Eigen::VectorXd& q) const {
    if (q.size() != dof()) {
      throw InputError("joint vector has length " + std::to_string(q.size()) +
                       ", chain has " + std::to_string(dof()) + " actuated joints");
    }
  }

  void validate() const {
    if (links_.size() != joints_.size() + 1) {
      throw ValidationError("links", "chain needs one child link per joint plus the root");
    }
    int actuated = 0;
    for (const auto& joint : joints_) {
      if (joint.kind != JointKind::kFixed) {
        ++actuated;
        if (std::abs(joint.axis.norm() - 1.0) > 1e-9) {
          throw ValidationError("joint '" + joint.name + "'", "axis is not unit length");
        }
        if (!(joint.velocity_limit > 0.0) || !(joint.acceleration_limit > 0.0)) {
          throw ValidationError("joint '" + joint.name + "'",
                                "velocity and acceleration limits must be positive");
        }
      }
      if (joint.position_lower > joint.position_upper) {
        throw ValidationError("joint '" + joint.name + "'", "position limits have lo > hi");
      }
    }
    if (actuated < 1) throw ValidationError("joints", "chain has no actuated joints");
    for (std::size_t i = 0; i < links_.size(); ++i) {
      for (std::size_t j = i + 1; j < links_.size(); ++j) {
        if (links_[i] == links_[j]) {
          throw ValidationError("links", "duplicate link name '" + links_[i] + "'");
        }
      }
    }
    auto known = [&](const std::string& name) {
      return std::find(links_.begin(), links_.end(), name) != links_.end();
    };
    for (const auto& s : collision_spheres_) {
      if (!known(s.link)) {
        throw ValidationError("collision_spheres",
                              "sphere references unknown link '" + s.link + "'");
      }
      if (!(s.radius > 0.0)) {
        throw ValidationError("collision_spheres", "sphere radius must be positive");
      }
    }
    if (!known(tip_link_)) {
      throw ValidationError("tip_link", "unknown link '" + tip_link_ + "'");
    }
  }

  std::vector<JointSpec> joints_;
  std::vector<std::string> links_;
  std::vector<CollisionSphereSpec> collision_spheres_;
  std::string tip_link_;
  std::vector<int> actuated_;
};

// ---------------------------------------------------------------------------
// Built-in robots

namespace detail {
inline JointSpec prismatic(std::string name, const Eigen::Vector3d& axis, double pos_lo,
                           double pos_hi, double vel, double acc) {
  JointSpec j;
  j.name = std::move(name);
  j.kind = JointKind::kPrismatic;
  j.axis = axis;
  j.position_lower = pos_lo;
  j.position_upper = pos_hi;
  j.velocity_limit = vel;
  j.acceleration_limit = acc;
  return j;
}
}  // namespace detail

// Point masses are modeled as orthogonal prismatic chains so planners and the
// simulator see a single robot abstraction. One collision sphere sits at the tip.
inline KinematicChain make_point_mass_2d(double radius = 0.1) {
  if (!(radius > 0.0)) throw InputError("point mass radius must be positive");
  std::vector<JointSpec> joints = {
      detail::prismatic("slide_x", Eigen::Vector3d::UnitX(), -50.0, 50.0, 5.0, 10.0),
      detail::prismatic("slide_y", Eigen::Vector3d::UnitY(), -50.0, 50.0, 5.0, 10.0)};
  return KinematicChain("base", std::move(joints), {"x_stage", "tip"},
                        {{"tip", Eigen::Vector3d::Zero(), radius}}, "tip");
}

inline KinematicChain make_point_mass_3d(double radius = 0.1) {
  if (!(radius > 0.0)) throw InputError("point mass radius must be positive");
  std::vector<JointSpec> joints = {
      detail::prismatic("slide_x", Eigen::Vector3d::UnitX(), -50.0, 50.0, 5.0, 10.0),
      detail::prismatic("slide_y", Eigen::Vector3d::UnitY(), -50.0, 50.0, 5.0, 10.0),
      detail::prismatic("slide_z", Eigen::Vector3d::UnitZ(), -50.0, 50.0, 5.0, 10.0)};
  return KinematicChain("base", std::move(joints), {"x_stage", "y_stage", "tip"},
                        {{"tip", Eigen::Vector3d::Zero(), radius}}, "tip");
}

// Planar arm with one revolute z joint per link. Collision spheres sit at each
// link midpoint plus one at the tip.
inline KinematicChain make_planar_arm(const std::vector<double>& lengths,
                                      double sphere_radius) {
  if (lengths.empty()) throw InputError("planar arm needs at least one link length");
  for (double l : lengths) {
    if (!(l > 0.0)) throw InputError("planar arm link lengths must be positive");
  }
  if (!(sphere_radius > 0.0)) throw InputError("planar arm sphere radius must be positive");

  std::vector<JointSpec> joints;
  std::vector<std::string> child_links;
  std::vector<CollisionSphereSpec> spheres;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    JointSpec j;
    j.name = "joint" + std::to_string(i + 1);
    j.kind = JointKind::kRevolute;
    j.axis = Eigen::Vector3d::UnitZ();
    j.origin_xyz = i == 0 ? Eigen::Vector3d::Zero() : Eigen::Vector3d(lengths[i - 1], 0, 0);
    j.position_lower = -2.0 * M_PI;
    j.position_upper = 2.0 * M_PI;
    j.velocity_limit = 2.0;
    j.acceleration_limit = 10.0;
    joints.push_back(j);
    const std::string link = "link" + std::to_string(i + 1);
    child_links.push_back(link);
    spheres.push_back({link, Eigen::Vector3d(lengths[i] / 2.0, 0, 0), sphere_radius});
  }
  JointSpec tip;
  tip.name = "tip_joint";
  tip.kind = JointKind::kFixed;
  tip.origin_xyz = Eigen::Vector3d(lengths.back(), 0, 0);
  joints.push_back(tip);
  child_links.push_back("tip");
  spheres.push_back({"tip", Eigen::Vector3d::Zero(), sphere_radius});
  return KinematicChain("base", std::move(joints), std::move(child_links), std::move(spheres),
                        "tip");
}

}  // namespace planbench
