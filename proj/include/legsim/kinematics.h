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

#ifndef LEGSIM_KINEMATICS_H_
#define LEGSIM_KINEMATICS_H_

#include "legsim/types.h"

namespace legsim {

// Planar rotation by theta (counterclockwise, det = 1).
Mat2 rot2(double theta);

// d/dtheta of rot2.
Mat2 rot2_deriv(double theta);

inline Vec2 perp(const Vec2& v) { return Vec2(-v.y(), v.x()); }

// Position-level kinematics of one material point: world position, velocity,
// Jacobian dp/dq and its time derivative.
struct PointKin {
  Vec2 p = Vec2::Zero();
  Vec2 v = Vec2::Zero();
  Mat26 J = Mat26::Zero();
  Mat26 Jdot = Mat26::Zero();
};

// Forward kinematics of every body: joints, contact extremities, and segment
// mass centers, with Jacobians.  Angular velocity rows are constant selector
// sums over (q3..q6) and are exposed per segment.
struct BodyKin {
  // Joint/contact points.
  PointKin hip;        // the body reference point (q1, q2)
  PointKin ankle;      // hip + upper limb
  PointKin palm;       // ankle + lower limb (leg/foot rigid intersection)
  PointKin toe_joint;  // palm + toe-joint offset (p_toe)
  PointKin claw;       // toe_joint + toe segment (p_claw, the toe tip)

  // Segment mass centers.
  PointKin body_com;
  PointKin upper_com;
  PointKin lower_com;
  PointKin palm_com;
  PointKin toe_com;

  // Angular-rate selector rows: omega_i = w_i . qd.
  Vec6 w_body = Vec6::Zero();
  Vec6 w_upper = Vec6::Zero();
  Vec6 w_lower = Vec6::Zero();
  Vec6 w_palm = Vec6::Zero();
  Vec6 w_toe = Vec6::Zero();

  // Absolute segment angles (rad).
  double body_angle = 0.0;
  double upper_angle = 0.0;
  double lower_angle = 0.0;
  double foot_angle = 0.0;  // direction of the toe-joint offset
  double toe_angle = 0.0;
};

BodyKin forward_kinematics(const GeneralizedState& state,
                           const RobotParams& params);

// Whole-robot mass center (mass-weighted over the five segments).
PointKin com_position(const GeneralizedState& state, const RobotParams& params);

// Stacked active constraint points p_c: FlatToe -> [p_toe; p_claw] in R^4,
// ToeTip -> p_claw in R^2.  Throws ConfigError for Airborne.
VecX constraint_positions(const GeneralizedState& state,
                          const RobotParams& params, ContactMode mode);

struct ConstraintKin {
  VecX p;      // stacked constraint positions
  VecX v;      // J_c qd
  MatX J;      // dim x 6
  MatX Jdot;   // dim x 6
};

ConstraintKin constraint_jacobian(const GeneralizedState& state,
                                  const RobotParams& params, ContactMode mode);

// One controlled quantity with its differential data.
struct TaskValue {
  double value = 0.0;
  double rate = 0.0;
  Eigen::Matrix<double, 1, 6> J = Eigen::Matrix<double, 1, 6>::Zero();
  Eigen::Matrix<double, 1, 6> Jdot = Eigen::Matrix<double, 1, 6>::Zero();
};

struct TaskValues {
  TaskValue pitch;       // q3
  TaskValue horizontal;  // mass-center x
  TaskValue vertical;    // mass-center y
};

TaskValues task_values(const GeneralizedState& state,
                       const RobotParams& params);

}  // namespace legsim

#endif  // LEGSIM_KINEMATICS_H_
