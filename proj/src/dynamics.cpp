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

#include "legsim/dynamics.h"

#include <array>
#include <cmath>
#include <sstream>

namespace legsim {

namespace {

struct Segment {
  const PointKin* com;
  const Vec6* w;
  double mass;
  double inertia;  // about the segment mass center
};

// The five segments with slender-rod inertias m l^2 / 12.
std::array<Segment, 5> segments(const BodyKin& k, const RobotParams& p) {
  auto rod = [](double m, double l) { return m * l * l / 12.0; };
  return {{
      {&k.body_com, &k.w_body, p.m_body, rod(p.m_body, p.body_length)},
      {&k.upper_com, &k.w_upper, p.m_upper, rod(p.m_upper, p.l1)},
      {&k.lower_com, &k.w_lower, p.m_lower, rod(p.m_lower, p.l2)},
      {&k.palm_com, &k.w_palm, p.m_palm, rod(p.m_palm, p.l3)},
      {&k.toe_com, &k.w_toe, p.m_toe, rod(p.m_toe, p.l4)},
  }};
}

}  // namespace

Eigen::Matrix<double, 2, 6> actuation_selection() {
  Eigen::Matrix<double, 2, 6> s = Eigen::Matrix<double, 2, 6>::Zero();
  s(0, 3) = 1.0;  // hip torque acts on q4
  s(1, 4) = 1.0;  // ankle torque acts on q5
  return s;
}

Mat6 mass_matrix(const GeneralizedState& state, const RobotParams& params) {
  const BodyKin k = forward_kinematics(state, params);
  Mat6 m = Mat6::Zero();
  for (const Segment& s : segments(k, params)) {
    m += s.mass * s.com->J.transpose() * s.com->J;
    m += s.inertia * (*s.w) * s.w->transpose();
  }
  return m;
}

Mat6 coriolis_matrix(const GeneralizedState& state, const RobotParams& params) {
  // C = sum_i m_i J_i^T Jdot_i.  Rotational terms vanish because the angular
  // rows are constant.  Mdot - 2C = sum m (Jdot^T J - J^T Jdot) is skew.
  const BodyKin k = forward_kinematics(state, params);
  Mat6 c = Mat6::Zero();
  for (const Segment& s : segments(k, params)) {
    c += s.mass * s.com->J.transpose() * s.com->Jdot;
  }
  return c;
}

Vec6 gravity_vector(const GeneralizedState& state, const RobotParams& params) {
  const BodyKin k = forward_kinematics(state, params);
  Vec6 g = Vec6::Zero();
  for (const Segment& s : segments(k, params)) {
    g += s.mass * kGravity * s.com->J.row(1).transpose();
  }
  return g;
}

Vec6 bias_forces(const GeneralizedState& state, const RobotParams& params) {
  return coriolis_matrix(state, params) * state.qd +
         gravity_vector(state, params);
}

DynamicsTerms dynamics_terms(const GeneralizedState& state,
                             const RobotParams& params) {
  DynamicsTerms t;
  t.M = mass_matrix(state, params);
  t.bias = bias_forces(state, params);
  return t;
}

namespace {

// Lift/drag coefficients as a function of the angle of attack.
void aero_coefficients(AeroModel model, double alpha, double* cl, double* cd) {
  const double sa = std::sin(alpha);
  const double ca = std::cos(alpha);
  switch (model) {
    case AeroModel::kFlatPlate:
      *cl = 2.0 * sa * ca;
      *cd = 2.0 * sa * sa;
      return;
    case AeroModel::kThinAirfoilWithStall: {
      const double stall = deg2rad(15.0);
      if (std::abs(alpha) <= stall) {
        *cl = 2.0 * kPi * sa;
        *cd = 0.02 + 2.0 * sa * sa;
      } else {
        *cl = 2.0 * sa * ca;
        *cd = 2.0 * sa * sa;
      }
      return;
    }
  }
}

Vec2 surface_force(const PointKin& pt, double chord_angle, double area,
                   double rho, AeroModel model) {
  const double speed2 = pt.v.squaredNorm();
  if (speed2 < 1e-18) return Vec2::Zero();
  const double speed = std::sqrt(speed2);
  const Vec2 vhat = pt.v / speed;
  const double gamma = std::atan2(pt.v.y(), pt.v.x());
  double alpha = chord_angle - gamma;
  alpha = std::remainder(alpha, 2.0 * kPi);
  double cl = 0.0, cd = 0.0;
  aero_coefficients(model, alpha, &cl, &cd);
  const double qbar = 0.5 * rho * speed2 * area;
  return qbar * (cl * perp(vhat) - cd * vhat);
}

}  // namespace

ExternalForces external_forces(const GeneralizedState& state,
                               const ActuationInput& u,
                               const RobotParams& params,
                               const ForceConfig& cfg) {
  ExternalForces out;
  const BodyKin k = forward_kinematics(state, params);
  const double pitch = state.q[2];

  if (cfg.thrust) {
    const double a = pitch + params.thrust_offset;
    out.f_propeller =
        u.thrust_level * params.max_thrust * Vec2(std::cos(a), std::sin(a));
    // The propeller acts along the body axis through the reference point.
    out.generalized += k.hip.J.transpose() * out.f_propeller;
  }

  if (cfg.aero) {
    auto body_point = [&](const Vec2& r) {
      PointKin pk;
      const Vec2 u2 = rot2(pitch) * r;
      const Vec2 up = perp(u2);
      pk.p = k.hip.p + u2;
      pk.v = k.hip.v + state.qd[2] * up;
      pk.J = k.hip.J;
      pk.J.col(2) += up;
      pk.Jdot.col(2) += state.qd[2] * perp(up);
      return pk;
    };
    const PointKin wing = body_point(params.p_wing);
    const PointKin tail = body_point(params.p_tail);
    out.f_wing = surface_force(wing, pitch + params.wing_offset + u.wing_surface,
                               params.wing_area, params.air_density,
                               cfg.aero_model);
    out.f_tail = surface_force(tail, pitch + params.tail_offset + u.tail_surface,
                               params.tail_area, params.air_density,
                               cfg.aero_model);
    out.generalized += wing.J.transpose() * out.f_wing;
    out.generalized += tail.J.transpose() * out.f_tail;
  }

  if (cfg.ankle_spring) {
    out.tau_ankle_spring =
        -params.ankle_spring * (state.q[4] - params.ankle_spring_rest);
    out.generalized[4] += out.tau_ankle_spring;
  }
  if (cfg.toe_spring) {
    out.tau_toe_spring =
        -params.toe_spring * (state.q[5] - params.toe_spring_rest);
    out.generalized[5] += out.tau_toe_spring;
  }
  if (cfg.joint_damping) {
    out.generalized[5] += -params.toe_joint_damping * state.qd[5];
  }
  if (cfg.toe_stop) {
    // Unilateral travel stops; each can only push back into the range.
    const double q6 = state.q[5];
    const double qd6 = state.qd[5];
    double tau = 0.0;
    if (q6 > params.toe_deflection_max) {
      tau = -params.toe_stop_stiffness * (q6 - params.toe_deflection_max) -
            params.toe_stop_damping * qd6;
      tau = std::min(tau, 0.0);
    } else if (q6 < 0.0) {
      tau = -params.toe_stop_stiffness * q6 - params.toe_stop_damping * qd6;
      tau = std::max(tau, 0.0);
    }
    out.tau_toe_stop = tau;
    out.generalized[5] += tau;
  }
  return out;
}

StanceAccel constrained_accel(const GeneralizedState& state, const Vec2& tau,
                              const ActuationInput& u,
                              const RobotParams& params, ContactMode mode,
                              const ForceConfig& fcfg,
                              const StanceOptions& opts) {
  if (mode == ContactMode::kAirborne) {
    throw ConfigError("no active constraints");
  }
  const int c = constraint_dim(mode);
  const DynamicsTerms terms = dynamics_terms(state, params);
  ForceConfig fc = fcfg;
  fc.aero = fcfg.aero && fcfg.aero_in_stance;
  const ExternalForces ext = external_forces(state, u, params, fc);
  const ConstraintKin ck = constraint_jacobian(state, params, mode);

  const int n = 6 + c;
  MatX kkt = MatX::Zero(n, n);
  kkt.topLeftCorner(6, 6) = terms.M;
  kkt.topRightCorner(6, c) = ck.J.transpose();
  kkt.bottomLeftCorner(c, 6) = ck.J;

  VecX rhs(n);
  rhs.head<6>() =
      terms.S.transpose() * tau + ext.generalized - terms.bias;
  VecX stab = VecX::Zero(c);
  const double w = opts.baumgarte_omega;
  if (w > 0.0) {
    stab += 2.0 * w * ck.v;
    if (opts.anchor) {
      stab += w * w * (ck.p - *opts.anchor);
    }
  }
  rhs.tail(c) = -(ck.Jdot * state.qd) - stab;

  // FlatToe pins both ends of the rigid toe segment, which is only three
  // independent constraints; the KKT matrix is structurally rank deficient
  // there while qdd stays unique.  A complete-orthogonal solve returns the
  // minimum-norm multiplier; genuine degeneracy shows up as residual.
  Eigen::CompleteOrthogonalDecomposition<MatX> cod(kkt);
  const VecX sol = cod.solve(rhs);
  const double scale = std::max(1.0, rhs.norm());
  if (!sol.allFinite() || (kkt * sol - rhs).norm() > 1e-6 * scale) {
    std::ostringstream msg;
    msg << "constraint degeneracy: KKT system inconsistent (rank "
        << cod.rank() << " of " << n << ", residual "
        << (kkt * sol - rhs).norm() << ")";
    throw NumericsError(msg.str());
  }

  StanceAccel out;
  out.qdd = sol.head<6>();
  // The multiplier in this block layout is the force the foot exerts on the
  // ground; report the reaction acting on the robot.
  out.contact_force = -sol.tail(c);
  return out;
}

Vec6 flight_accel(const GeneralizedState& state, const Vec2& tau,
                  const ActuationInput& u, const RobotParams& params,
                  const ForceConfig& fcfg) {
  const DynamicsTerms terms = dynamics_terms(state, params);
  const ExternalForces ext = external_forces(state, u, params, fcfg);
  const Vec6 rhs = terms.S.transpose() * tau + ext.generalized - terms.bias;
  return terms.M.ldlt().solve(rhs);
}

double kinetic_energy(const GeneralizedState& state,
                      const RobotParams& params) {
  return 0.5 * state.qd.dot(mass_matrix(state, params) * state.qd);
}

double gravitational_energy(const GeneralizedState& state,
                            const RobotParams& params) {
  const BodyKin k = forward_kinematics(state, params);
  double v = 0.0;
  for (const Segment& s : segments(k, params)) {
    v += s.mass * kGravity * s.com->p.y();
  }
  return v;
}

double spring_energy(const GeneralizedState& state, const RobotParams& params,
                     const ForceConfig& fcfg) {
  double e = 0.0;
  if (fcfg.ankle_spring) {
    const double d = state.q[4] - params.ankle_spring_rest;
    e += 0.5 * params.ankle_spring * d * d;
  }
  if (fcfg.toe_spring) {
    const double d = state.q[5] - params.toe_spring_rest;
    e += 0.5 * params.toe_spring * d * d;
  }
  return e;
}

}  // namespace legsim
