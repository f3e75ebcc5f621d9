// Copyright 2026 The Legsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEGSIM_TYPES_H_
#define LEGSIM_TYPES_H_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace legsim {

using Vec2 = Eigen::Vector2d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat26 = Eigen::Matrix<double, 2, 6>;
using MatX = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kGravity = 9.81;  // m/s^2

inline constexpr double deg2rad(double d) { return d * kPi / 180.0; }
inline constexpr double rad2deg(double r) { return r * 180.0 / kPi; }

// Torsional spring constants are specified in N*mm/deg in parameter tables.
inline constexpr double nmm_per_deg_to_nm_per_rad(double k) {
  return k * 1e-3 * 180.0 / kPi;
}

// Errors from bad configuration or inputs (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Errors from numerical failure: singular solves, divergence (CLI exit code 3).
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Which foot constraint set is active.  FlatToe pins toe joint and toe tip
// (4 scalar constraints), ToeTip pins the toe tip only (2), Airborne none.
enum class ContactMode { kFlatToe, kToeTip, kAirborne };

inline int constraint_dim(ContactMode mode) {
  switch (mode) {
    case ContactMode::kFlatToe:
      return 4;
    case ContactMode::kToeTip:
      return 2;
    case ContactMode::kAirborne:
      return 0;
  }
  return 0;
}

const char* to_string(ContactMode mode);
ContactMode contact_mode_from_string(const std::string& s);

// Six generalized coordinates and their rates.
//   q1, q2  horizontal/vertical position of the body reference point (m)
//   q3      body pitch angle (rad)
//   q4      upper-limb angle at the hip, relative to the body axis (rad)
//   q5      lower-limb angle at the ankle, relative to the upper limb (rad)
//   q6      toe deflection angle, relative to the rigid foot extension (rad)
// Absolute segment angles are cumulative sums down the chain starting at q3.
struct GeneralizedState {
  Vec6 q = Vec6::Zero();
  Vec6 qd = Vec6::Zero();

  bool finite() const { return q.allFinite() && qd.allFinite(); }
};

// Physical constants of the platform.  Defaults are the simulation parameter
// set of the reference platform (desk scale, ~0.55 kg with one planar leg
// standing in for the synchronized pair).
struct RobotParams {
  // Geometry (m / rad).
  double l1 = 0.12;                 // upper limb length
  double l2 = 0.12;                 // lower limb length
  double l3 = 0.023;                // toe joint offset length
  double theta3 = deg2rad(45.0);    // toe joint offset angle (fixed geometry)
  double l4 = 0.06;                 // toe length
  double body_length = 0.5;

  // Masses (kg).  Limb masses are per planar model segment.
  double m_body = 0.5;
  double m_upper = 0.015;
  double m_lower = 0.015;
  double m_palm = 0.015;
  double m_toe = 0.005;

  // Aerodynamics.
  double air_density = 1.225;       // kg/m^3
  double wing_area = 0.18;          // m^2
  double tail_area = 0.0864;        // m^2
  double wing_offset = deg2rad(7.0);
  double tail_offset = deg2rad(1.0);
  double thrust_offset = deg2rad(7.0);
  double max_thrust = 0.63 * kGravity;  // N (table value is kg-force)
  Vec2 p_wing{-0.02, 0.042};        // wing aero center, body frame (m)
  Vec2 p_tail{-0.28, 0.074};        // tail aero center, body frame (m)

  // Springs (N*m/rad).
  double ankle_spring = nmm_per_deg_to_nm_per_rad(3.207);
  double toe_spring = nmm_per_deg_to_nm_per_rad(6.249);
  double ankle_spring_rest = 0.0;          // leg-straight; crouch pre-loads it
  double toe_spring_rest = deg2rad(25.0);  // unloaded toe posture

  // Actuation and limits.
  double gear_ratio = 19.13;
  double motor_max_speed = deg2rad(99900.0);  // rad/s
  double motor_max_torque = 0.30;             // N*m at the motor shaft
  double motor_max_power = 60.0;              // W per joint (speed-torque cap)
  double toe_deflection_max = deg2rad(25.0);

  // Travel-limit end stop of the toe joint.  The deflection range is
  // [0, toe_deflection_max]; beyond it the stop pushes back.
  double toe_stop_stiffness = 30.0;  // N*m/rad
  double toe_stop_damping = 0.05;    // N*m*s/rad

  // Viscous loss of the passive toe joint (spring hysteresis/friction).
  double toe_joint_damping = 0.002;  // N*m*s/rad

  // Body mass center offset from the reference point, body frame (m).
  Vec2 body_com_offset{0.0, 0.0};

  // Rear ground-contact reach of the palm/back claw behind the toe joint (m).
  double back_claw_reach = 0.03;

  double total_mass() const {
    return m_body + m_upper + m_lower + m_palm + m_toe;
  }

  // Joint-side torque limit seen through the gearbox.
  double joint_torque_limit() const { return gear_ratio * motor_max_torque; }

  // Speed-dependent torque limit: DC motor power output collapses at high
  // speed, so the available joint torque is the lesser of the stall-side
  // box limit and P_max / |joint speed|.
  double joint_torque_limit_at(double joint_speed) const {
    const double box = joint_torque_limit();
    const double w = std::abs(joint_speed);
    if (w < 1e-9) return box;
    return std::min(box, motor_max_power / w);
  }

  // Throws ConfigError when a physical constant is out of range.
  void validate() const;
};

}  // namespace legsim

#endif  // LEGSIM_TYPES_H_
