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

#ifndef LEGSIM_CONTROL_H_
#define LEGSIM_CONTROL_H_

#include <string>
#include <vector>

#include "legsim/dynamics.h"
#include "legsim/kinematics.h"
#include "legsim/types.h"

namespace legsim {

enum class TaskId { kPitch, kHorizontal, kVertical };

// One prioritized motion objective.  Lower priority index = higher priority.
struct Task {
  TaskId id = TaskId::kPitch;
  int priority = 1;
  MatX J;      // rows x 6
  MatX Jdot;   // rows x 6
  VecX x;      // current value(s)
  VecX xd;     // current rate(s)
  VecX x_des;
  VecX xd_des;
  double kp = 400.0;  // 1/s^2
  double kd = 40.0;   // 1/s
  VecX b;  // task-space target: xdd_des - Jdot qd
};

struct ControlConfig {
  double lambda = 1e-6;  // damping for all pseudoinverses
  // Per-task PD gain table.  The vertical rate gain is heavy so the push
  // carries through the final leg-extension whip before lift-off.
  double pitch_kp = 400.0;
  double pitch_kd = 60.0;
  double horizontal_kp = 400.0;
  double horizontal_kd = 40.0;
  double vertical_kp = 400.0;
  double vertical_kd = 200.0;
  std::vector<TaskId> priority = {TaskId::kPitch, TaskId::kHorizontal,
                                  TaskId::kVertical};
  // Take-off reference shaping.  The ramp deliberately reaches past the
  // physical 2.5 m/s take-off speed so contact release happens mid-push;
  // the achieved speed at lift-off lands on the 2.5 m/s target.
  double takeoff_speed = 2.75;      // m/s reference ramp cap
  double ramp_time = 0.1833;        // s to reach takeoff_speed
  double jump_elevation = deg2rad(68.0);  // world angle of the jump direction
  bool jump_elevation_auto = false;
  double pitch_ref = deg2rad(10.0);
  // Flight joint-hold gains.
  double hold_kp = 100.0;  // N*m/rad
  double hold_kd = 0.6;    // N*m*s/rad
  bool saturate = true;    // clamp torques at the gear-side limit
};

// PD law on a task: xdd_des = kp (x_des - x) + kd (xd_des - xd).
VecX task_pd(const Task& task);

// Damped least-squares pseudoinverse A^T (lambda I + A A^T)^-1.  With
// lambda = 0 the exact pseudoinverse of a full-row-rank matrix; throws
// NumericsError("rank deficiency requires damping") when A A^T is singular.
MatX damped_pinv(const MatX& a, double lambda);

// Null-space projector I - J^+ J of an augmented Jacobian.
MatX nullspace(const MatX& j_augmented, double lambda);

// Resolves the ordered task list into desired generalized accelerations by
// successive null-space projections.
Vec6 prioritized_accel(const std::vector<Task>& tasks, double lambda);

// Maps desired accelerations to (tau_hip, tau_ankle) under the active foot
// constraint via QR decomposition of J_c^T.  External forces are not part of
// the inverse model; feedback absorbs them.
Vec2 torque_extraction(const Vec6& qdd_des, const GeneralizedState& state,
                       const RobotParams& params, ContactMode mode,
                       double lambda = 1e-6);

// Reference trajectory for the jumping take-off: the mass center accelerates
// from rest along a fixed direction at constant rate until the take-off
// speed, pitch holds its initial value.
struct TakeoffReference {
  Vec2 com0 = Vec2::Zero();
  Vec2 dir = Vec2(0.0, 1.0);
  double accel = 14.7;      // m/s^2 along dir
  double v_target = 2.5;    // m/s
  double pitch = deg2rad(10.0);

  void eval(double t, Vec2* com_des, Vec2* vcom_des) const;
};

TakeoffReference make_takeoff_reference(const GeneralizedState& initial,
                                        const RobotParams& params,
                                        const ControlConfig& cfg);

// Builds the prioritized task set for time t of the take-off.
std::vector<Task> takeoff_tasks(const GeneralizedState& state,
                                const RobotParams& params,
                                const ControlConfig& cfg,
                                const TakeoffReference& ref, double t);

// Full stance control step: tasks -> PD -> priority resolution -> torque
// extraction, with optional saturation at the gear-side torque limit.
Vec2 takeoff_controller(const GeneralizedState& state,
                        const RobotParams& params, const ControlConfig& cfg,
                        const TakeoffReference& ref, double t,
                        ContactMode mode);

// Flight-phase joint hold: PD on (q4, q5) toward fixed targets.
Vec2 hold_controller(const GeneralizedState& state, const Vec2& joints_hold,
                     const ControlConfig& cfg,
                     const RobotParams& params);

}  // namespace legsim

#endif  // LEGSIM_CONTROL_H_
