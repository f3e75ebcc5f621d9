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

#include "legsim/kinematics.h"

#include <cmath>

namespace legsim {

Mat2 rot2(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

Mat2 rot2_deriv(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 r;
  r << -s, -c, c, -s;
  return r;
}

const char* to_string(ContactMode mode) {
  switch (mode) {
    case ContactMode::kFlatToe:
      return "flat_toe";
    case ContactMode::kToeTip:
      return "toe_tip";
    case ContactMode::kAirborne:
      return "airborne";
  }
  return "?";
}

ContactMode contact_mode_from_string(const std::string& s) {
  if (s == "flat_toe") return ContactMode::kFlatToe;
  if (s == "toe_tip") return ContactMode::kToeTip;
  if (s == "airborne") return ContactMode::kAirborne;
  throw ConfigError("unknown contact mode: " + s);
}

void RobotParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError(std::string(name) + " must be strictly positive");
    }
  };
  positive(l1, "l_1");
  positive(l2, "l_2");
  positive(l3, "l_3");
  positive(l4, "l_4");
  positive(body_length, "Body length");
  positive(m_body, "Body mass");
  positive(m_upper, "Upper limb mass");
  positive(m_lower, "Lower limb mass");
  positive(m_palm, "Palm mass");
  positive(m_toe, "Toe mass");
  positive(air_density, "Air density");
  positive(wing_area, "Wing area");
  positive(tail_area, "Tail area");
  positive(gear_ratio, "Gear ratio");
  positive(motor_max_speed, "Motor max speed");
  if (ankle_spring < 0.0 || toe_spring < 0.0) {
    throw ConfigError("spring constants must be non-negative");
  }
  if (toe_deflection_max <= 0.0) {
    throw ConfigError("Toe deflection max must be strictly positive");
  }
}

namespace {

// Accumulates a planar chain rooted at the body reference point.  Angles are
// cumulative: rotate() folds another coordinate (or constant) into the frame
// heading, extend()/offset() append a rigid vector expressed in that frame.
class Chain {
 public:
  Chain(const GeneralizedState& s) : q_(s.q), qd_(s.qd) {
    pk_.p = Vec2(s.q[0], s.q[1]);
    pk_.v = Vec2(s.qd[0], s.qd[1]);
    pk_.J(0, 0) = 1.0;
    pk_.J(1, 1) = 1.0;
  }

  Chain& rotate_coord(int idx) {
    angle_ += q_[idx];
    rate_ += qd_[idx];
    deps_[idx] = true;
    return *this;
  }

  Chain& rotate_const(double a) {
    angle_ += a;
    return *this;
  }

  // Appends the rigid body-frame vector r at the current heading.
  Chain& offset(const Vec2& r) {
    const Vec2 u = rot2(angle_) * r;
    const Vec2 up = perp(u);
    pk_.p += u;
    pk_.v += rate_ * up;
    for (int j = 2; j < 6; ++j) {
      if (!deps_[j]) continue;
      pk_.J.col(j) += up;
      pk_.Jdot.col(j) += rate_ * perp(up);  // = -rate * u
    }
    return *this;
  }

  Chain& extend(double len) { return offset(Vec2(len, 0.0)); }

  const PointKin& point() const { return pk_; }
  double angle() const { return angle_; }
  double rate() const { return rate_; }

 private:
  Vec6 q_, qd_;
  PointKin pk_;
  double angle_ = 0.0;
  double rate_ = 0.0;
  bool deps_[6] = {false, false, false, false, false, false};
};

}  // namespace

BodyKin forward_kinematics(const GeneralizedState& state,
                           const RobotParams& params) {
  BodyKin out;

  Chain chain(state);
  out.hip = chain.point();

  chain.rotate_coord(2);  // q3: body pitch
  out.body_angle = chain.angle();
  {
    Chain body = chain;
    body.offset(params.body_com_offset);
    out.body_com = body.point();
  }

  chain.rotate_coord(3);  // q4: upper limb
  out.upper_angle = chain.angle();
  {
    Chain mid = chain;
    mid.extend(0.5 * params.l1);
    out.upper_com = mid.point();
  }
  chain.extend(params.l1);
  out.ankle = chain.point();

  chain.rotate_coord(4);  // q5: lower limb
  out.lower_angle = chain.angle();
  {
    Chain mid = chain;
    mid.extend(0.5 * params.l2);
    out.lower_com = mid.point();
  }
  chain.extend(params.l2);
  out.palm = chain.point();

  chain.rotate_const(params.theta3);  // fixed foot geometry
  out.foot_angle = chain.angle();
  {
    Chain mid = chain;
    mid.extend(0.5 * params.l3);
    out.palm_com = mid.point();
  }
  chain.extend(params.l3);
  out.toe_joint = chain.point();

  chain.rotate_coord(5);  // q6: toe deflection
  out.toe_angle = chain.angle();
  {
    Chain mid = chain;
    mid.extend(0.5 * params.l4);
    out.toe_com = mid.point();
  }
  chain.extend(params.l4);
  out.claw = chain.point();

  out.w_body << 0, 0, 1, 0, 0, 0;
  out.w_upper << 0, 0, 1, 1, 0, 0;
  out.w_lower << 0, 0, 1, 1, 1, 0;
  out.w_palm = out.w_lower;  // foot is rigid with the lower limb offset
  out.w_toe << 0, 0, 1, 1, 1, 1;
  return out;
}

PointKin com_position(const GeneralizedState& state,
                      const RobotParams& params) {
  const BodyKin k = forward_kinematics(state, params);
  const double m = params.total_mass();
  PointKin com;
  auto add = [&](const PointKin& pk, double mi) {
    const double w = mi / m;
    com.p += w * pk.p;
    com.v += w * pk.v;
    com.J += w * pk.J;
    com.Jdot += w * pk.Jdot;
  };
  add(k.body_com, params.m_body);
  add(k.upper_com, params.m_upper);
  add(k.lower_com, params.m_lower);
  add(k.palm_com, params.m_palm);
  add(k.toe_com, params.m_toe);
  return com;
}

ConstraintKin constraint_jacobian(const GeneralizedState& state,
                                  const RobotParams& params,
                                  ContactMode mode) {
  if (mode == ContactMode::kAirborne) {
    throw ConfigError("no active constraints");
  }
  const BodyKin k = forward_kinematics(state, params);
  const int dim = constraint_dim(mode);
  ConstraintKin out;
  out.p.resize(dim);
  out.v.resize(dim);
  out.J.resize(dim, 6);
  out.Jdot.resize(dim, 6);
  auto put = [&](int row, const PointKin& pk) {
    out.p.segment<2>(row) = pk.p;
    out.v.segment<2>(row) = pk.v;
    out.J.block<2, 6>(row, 0) = pk.J;
    out.Jdot.block<2, 6>(row, 0) = pk.Jdot;
  };
  if (mode == ContactMode::kFlatToe) {
    put(0, k.toe_joint);
    put(2, k.claw);
  } else {
    put(0, k.claw);
  }
  return out;
}

VecX constraint_positions(const GeneralizedState& state,
                          const RobotParams& params, ContactMode mode) {
  return constraint_jacobian(state, params, mode).p;
}

TaskValues task_values(const GeneralizedState& state,
                       const RobotParams& params) {
  TaskValues tv;
  tv.pitch.value = state.q[2];
  tv.pitch.rate = state.qd[2];
  tv.pitch.J(0, 2) = 1.0;

  const PointKin com = com_position(state, params);
  tv.horizontal.value = com.p.x();
  tv.horizontal.rate = com.v.x();
  tv.horizontal.J = com.J.row(0);
  tv.horizontal.Jdot = com.Jdot.row(0);
  tv.vertical.value = com.p.y();
  tv.vertical.rate = com.v.y();
  tv.vertical.J = com.J.row(1);
  tv.vertical.Jdot = com.Jdot.row(1);
  return tv;
}

}  // namespace legsim
