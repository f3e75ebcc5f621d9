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

#include "legsim/control.h"

#include <algorithm>
#include <cmath>

namespace legsim {

VecX task_pd(const Task& task) {
  return task.kp * (task.x_des - task.x) + task.kd * (task.xd_des - task.xd);
}

MatX damped_pinv(const MatX& a, double lambda) {
  if (lambda < 0.0) throw ConfigError("damping constant must be >= 0");
  // A^T (lambda I + A A^T)^-1 evaluated through the SVD: the Gram-matrix
  // inverse loses sigma^2/lambda digits near rank deficiency, the factored
  // form does not.
  Eigen::JacobiSVD<MatX> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const VecX& sv = svd.singularValues();
  if (lambda == 0.0) {
    const double tol = sv.size() ? sv[0] * 1e-12 : 0.0;
    if (sv.size() < a.rows() || sv[sv.size() - 1] <= tol) {
      throw NumericsError("rank deficiency requires damping");
    }
  }
  VecX inv(sv.size());
  for (int i = 0; i < sv.size(); ++i) {
    inv[i] = lambda == 0.0 ? 1.0 / sv[i] : sv[i] / (lambda + sv[i] * sv[i]);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

MatX nullspace(const MatX& j_augmented, double lambda) {
  const int k = static_cast<int>(j_augmented.cols());
  return MatX::Identity(k, k) - damped_pinv(j_augmented, lambda) * j_augmented;
}

Vec6 prioritized_accel(const std::vector<Task>& tasks, double lambda) {
  // Recursion: qdd_i = qdd_{i-1} + N_{i-1} (J_i N_{i-1})^+ (b_i - J_i qdd_{i-1})
  // with b_i = xdd_des_i - Jdot_i qd, N_0 = I.  Projecting the correction
  // through N_{i-1} keeps lower-priority corrections out of the row spaces of
  // all higher-priority tasks.
  Vec6 qdd = Vec6::Zero();
  MatX n_prev = MatX::Identity(6, 6);
  MatX j_aug(0, 6);
  for (const Task& task : tasks) {
    const MatX jn = task.J * n_prev;
    const VecX err = task.b - task.J * qdd;
    qdd += n_prev * (damped_pinv(jn, lambda) * err);

    MatX stacked(j_aug.rows() + task.J.rows(), 6);
    stacked << j_aug, task.J;
    j_aug = stacked;
    n_prev = nullspace(j_aug, lambda);
  }
  return qdd;
}

Vec2 torque_extraction(const Vec6& qdd_des, const GeneralizedState& state,
                       const RobotParams& params, ContactMode mode,
                       double lambda) {
  if (mode == ContactMode::kAirborne) {
    throw ConfigError("no active constraints");
  }
  const ConstraintKin ck = constraint_jacobian(state, params, mode);
  const int c = static_cast<int>(ck.J.rows());

  const Eigen::HouseholderQR<MatX> qr(ck.J.transpose());
  const MatX q_full = qr.householderQ() * MatX::Identity(6, 6);
  const MatX r = qr.matrixQR().topRows(c).triangularView<Eigen::Upper>();
  // Two pinned points of the rigid toe segment carry rank 3, not 4; only a
  // drop below the structural rank is an error.
  const int structural_rank = mode == ContactMode::kFlatToe ? 3 : 2;
  int rank = 0;
  for (int i = 0; i < c; ++i) {
    if (std::abs(r(i, i)) > 1e-10) ++rank;
  }
  if (rank < structural_rank) {
    throw NumericsError("constraint Jacobian rank deficient");
  }

  // S_u Q^T keeps the rows of Q^T spanning the constraint-force-free subspace.
  const MatX su_qt = q_full.transpose().bottomRows(6 - c);
  const DynamicsTerms terms = dynamics_terms(state, params);
  const MatX b = su_qt * terms.S.transpose();
  const VecX y = su_qt * (terms.M * qdd_des + terms.bias);
  const VecX tau = damped_pinv(b, lambda) * y;
  return Vec2(tau[0], tau[1]);
}

void TakeoffReference::eval(double t, Vec2* com_des, Vec2* vcom_des) const {
  const double t_ramp = v_target / accel;
  double s, v;
  if (t <= t_ramp) {
    v = accel * t;
    s = 0.5 * accel * t * t;
  } else {
    v = v_target;
    s = 0.5 * accel * t_ramp * t_ramp + v_target * (t - t_ramp);
  }
  *com_des = com0 + s * dir;
  *vcom_des = v * dir;
}

TakeoffReference make_takeoff_reference(const GeneralizedState& initial,
                                        const RobotParams& params,
                                        const ControlConfig& cfg) {
  TakeoffReference ref;
  const BodyKin k = forward_kinematics(initial, params);
  ref.com0 = com_position(initial, params).p;
  double elevation = cfg.jump_elevation;
  if (cfg.jump_elevation_auto) {
    // Jump along the leg-extension direction: toe joint toward the hip.
    const Vec2 d = k.hip.p - k.toe_joint.p;
    elevation = std::atan2(d.y(), d.x());
  }
  ref.dir = Vec2(std::cos(elevation), std::sin(elevation));
  ref.v_target = cfg.takeoff_speed;
  ref.accel = cfg.takeoff_speed / cfg.ramp_time;
  ref.pitch = cfg.pitch_ref;
  return ref;
}

std::vector<Task> takeoff_tasks(const GeneralizedState& state,
                                const RobotParams& params,
                                const ControlConfig& cfg,
                                const TakeoffReference& ref, double t) {
  const TaskValues tv = task_values(state, params);
  Vec2 com_des, vcom_des;
  ref.eval(t, &com_des, &vcom_des);

  auto scalar_task = [&](TaskId id, const TaskValue& v, double x_des,
                         double xd_des, double kp, double kd) {
    Task task;
    task.id = id;
    task.J = v.J;
    task.Jdot = v.Jdot;
    task.x = VecX::Constant(1, v.value);
    task.xd = VecX::Constant(1, v.rate);
    task.x_des = VecX::Constant(1, x_des);
    task.xd_des = VecX::Constant(1, xd_des);
    task.kp = kp;
    task.kd = kd;
    task.b = task_pd(task) - task.Jdot * state.qd;
    return task;
  };

  std::vector<Task> tasks;
  int prio = 1;
  for (TaskId id : cfg.priority) {
    Task task;
    switch (id) {
      case TaskId::kPitch:
        task = scalar_task(id, tv.pitch, ref.pitch, 0.0, cfg.pitch_kp,
                           cfg.pitch_kd);
        break;
      case TaskId::kHorizontal:
        task = scalar_task(id, tv.horizontal, com_des.x(), vcom_des.x(),
                           cfg.horizontal_kp, cfg.horizontal_kd);
        break;
      case TaskId::kVertical:
        task = scalar_task(id, tv.vertical, com_des.y(), vcom_des.y(),
                           cfg.vertical_kp, cfg.vertical_kd);
        break;
    }
    task.priority = prio++;
    tasks.push_back(std::move(task));
  }
  return tasks;
}

Vec2 takeoff_controller(const GeneralizedState& state,
                        const RobotParams& params, const ControlConfig& cfg,
                        const TakeoffReference& ref, double t,
                        ContactMode mode) {
  const std::vector<Task> tasks = takeoff_tasks(state, params, cfg, ref, t);
  const Vec6 qdd_des = prioritized_accel(tasks, cfg.lambda);
  Vec2 tau = torque_extraction(qdd_des, state, params, mode, cfg.lambda);
  if (cfg.saturate) {
    for (int i = 0; i < 2; ++i) {
      const double lim = params.joint_torque_limit_at(state.qd[3 + i]);
      tau[i] = std::clamp(tau[i], -lim, lim);
    }
  }
  return tau;
}

Vec2 hold_controller(const GeneralizedState& state, const Vec2& joints_hold,
                     const ControlConfig& cfg, const RobotParams& params) {
  Vec2 tau;
  tau[0] = cfg.hold_kp * (joints_hold[0] - state.q[3]) - cfg.hold_kd * state.qd[3];
  tau[1] = cfg.hold_kp * (joints_hold[1] - state.q[4]) - cfg.hold_kd * state.qd[4];
  if (cfg.saturate) {
    for (int i = 0; i < 2; ++i) {
      const double lim = params.joint_torque_limit_at(state.qd[3 + i]);
      tau[i] = std::clamp(tau[i], -lim, lim);
    }
  }
  return tau;
}

}  // namespace legsim
