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

#include "legsim/gaits.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "legsim/kinematics.h"

namespace legsim {

const char* to_string(GaitMode mode) {
  switch (mode) {
    case GaitMode::kJumpTakeoff:
      return "jump_takeoff";
    case GaitMode::kWalk:
      return "walk";
    case GaitMode::kHeightJump:
      return "height_jump";
    case GaitMode::kForwardHop:
      return "forward_hop";
  }
  return "?";
}

GaitMode gait_mode_from_string(const std::string& s) {
  if (s == "jump_takeoff") return GaitMode::kJumpTakeoff;
  if (s == "walk") return GaitMode::kWalk;
  if (s == "height_jump") return GaitMode::kHeightJump;
  if (s == "forward_hop") return GaitMode::kForwardHop;
  throw ConfigError("unknown gait mode: " + s);
}

const char* to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::kStableToeSupport:
      return "stable_toe_support";
    case StabilityVerdict::kStablePalmSupport:
      return "stable_palm_support";
    case StabilityVerdict::kUnstableNoseDown:
      return "unstable_nose_down";
    case StabilityVerdict::kUnstableNoseUp:
      return "unstable_nose_up";
  }
  return "?";
}

double FootTrajectory::total_duration() const {
  double d = 0.0;
  for (const GaitPhase& p : phases) d += p.duration;
  return d;
}

const GaitPhase* FootTrajectory::phase(const std::string& name) const {
  for (const GaitPhase& p : phases) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

// Cubic Hermite through uniformly timed waypoints, zero end velocities,
// central-difference interior tangents.
Vec2 sample_phase(const GaitPhase& phase, double s) {
  const auto& w = phase.waypoints;
  const int n = static_cast<int>(w.size());
  if (n == 1) return w[0];
  s = std::clamp(s, 0.0, 1.0);
  const double u = s * (n - 1);
  int i = std::min(static_cast<int>(u), n - 2);
  const double x = u - i;

  auto tangent = [&](int k) -> Vec2 {
    if (k <= 0 || k >= n - 1) return Vec2::Zero();
    return 0.5 * (w[k + 1] - w[k - 1]);
  };
  const Vec2 m0 = tangent(i);
  const Vec2 m1 = tangent(i + 1);
  const double x2 = x * x, x3 = x2 * x;
  return (2 * x3 - 3 * x2 + 1) * w[i] + (x3 - 2 * x2 + x) * m0 +
         (-2 * x3 + 3 * x2) * w[i + 1] + (x3 - x2) * m1;
}

}  // namespace

Vec2 FootTrajectory::sample(double t) const {
  if (phases.empty()) throw ConfigError("empty foot trajectory");
  t = std::clamp(t, 0.0, total_duration());
  double acc = 0.0;
  for (const GaitPhase& p : phases) {
    if (t <= acc + p.duration || &p == &phases.back()) {
      const double s = p.duration > 0 ? (t - acc) / p.duration : 0.0;
      return sample_phase(p, s);
    }
    acc += p.duration;
  }
  return phases.back().waypoints.back();
}

Vec2 push_direction(const FootTrajectory& traj, const std::string& phase_name) {
  const GaitPhase* p = traj.phase(phase_name);
  if (!p || p->waypoints.size() < 2) {
    throw ConfigError("no such phase: " + phase_name);
  }
  return -(p->waypoints.back() - p->waypoints.front());
}

namespace {

Vec2 crouch_foot(const RobotParams& params) {
  // Hip-frame foot position of the crouched take-off posture.
  return fk_leg({deg2rad(135.0), deg2rad(145.0)}, params);
}

}  // namespace

FootTrajectory gen_trajectory(GaitMode mode, const GaitConfig& cfg,
                              const RobotParams& params) {
  FootTrajectory traj;
  traj.mode = mode;
  const double reach = cfg.extension * (params.l1 + params.l2);

  switch (mode) {
    case GaitMode::kWalk: {
      const double h = cfg.stand_height;
      const double x0 = cfg.foot_offset;
      const double half = 0.5 * cfg.stride;
      GaitPhase stance{"stance",
                       0.5 * cfg.cycle_time,
                       {Vec2(x0 + half, -h), Vec2(x0, -h), Vec2(x0 - half, -h)}};
      GaitPhase swing{"swing",
                      0.5 * cfg.cycle_time,
                      {Vec2(x0 - half, -h), Vec2(x0, -h + cfg.clearance),
                       Vec2(x0 + half, -h)}};
      traj.phases = {stance, swing};
      break;
    }
    case GaitMode::kJumpTakeoff: {
      const Vec2 start = crouch_foot(params);
      const Vec2 ext = -reach * Vec2(std::cos(cfg.jump_angle),
                                     std::sin(cfg.jump_angle));
      GaitPhase push{"push-off", cfg.push_time, {start, ext}};
      GaitPhase stretch{"stretch-back",
                        0.3,
                        {ext, Vec2(-0.8 * reach, 0.3 * ext.y()),
                         Vec2(-0.55 * reach, -0.05)}};
      traj.phases = {push, stretch};
      break;
    }
    case GaitMode::kHeightJump: {
      const Vec2 start = crouch_foot(params);
      const Vec2 ext = -reach * Vec2(std::cos(cfg.height_jump_angle),
                                     std::sin(cfg.height_jump_angle));
      GaitPhase push{"push-off", cfg.push_time, {start, ext}};
      GaitPhase retract{"retract", 0.25, {ext, Vec2(-0.03, -0.45 * reach)}};
      traj.phases = {push, retract};
      break;
    }
    case GaitMode::kForwardHop: {
      const Vec2 stand(cfg.foot_offset, -cfg.stand_height);
      const Vec2 crouch = crouch_foot(params);
      const Vec2 ext = -reach * Vec2(std::cos(cfg.hop_angle),
                                     std::sin(cfg.hop_angle));
      const Vec2 tucked(-0.05, -0.45 * reach);
      const Vec2 landing(0.01, -0.7 * reach);
      const Vec2 settled(0.01, -0.55 * reach);
      traj.phases = {GaitPhase{"crouch", 0.25, {stand, crouch}},
                     GaitPhase{"push-off", cfg.push_time, {crouch, ext}},
                     GaitPhase{"retract", 0.2, {ext, tucked}},
                     GaitPhase{"stretch", 0.2, {tucked, landing}},
                     GaitPhase{"balance", 0.4, {landing, settled}}};
      break;
    }
  }
  return traj;
}

Vec2 fk_leg(const JointAngles& joints, const RobotParams& params) {
  const double a1 = joints.hip;
  const double a2 = joints.hip + joints.ankle;
  return params.l1 * Vec2(std::cos(a1), std::sin(a1)) +
         params.l2 * Vec2(std::cos(a2), std::sin(a2));
}

JointAngles ik_leg(const Vec2& target, const RobotParams& params,
                   bool bend_backward) {
  const double l1 = params.l1, l2 = params.l2;
  const double r = target.norm();
  const double r_max = l1 + l2 - 1e-6;
  const double r_min = std::abs(l1 - l2) + 1e-6;
  if (r > r_max || r < r_min) {
    const double rc = std::clamp(r, r_min, r_max);
    const Vec2 nearest = r > 0 ? Vec2(rc * target / r) : Vec2(0.0, -rc);
    std::ostringstream msg;
    msg << "unreachable foot target (" << target.x() << ", " << target.y()
        << "); nearest reachable point is (" << nearest.x() << ", "
        << nearest.y() << ")";
    throw ConfigError(msg.str());
  }
  const double c5 =
      std::clamp((r * r - l1 * l1 - l2 * l2) / (2.0 * l1 * l2), -1.0, 1.0);
  double ankle = std::acos(c5);  // in (0, pi): backward bend
  if (!bend_backward) ankle = -ankle;
  const double phi = std::atan2(target.y(), target.x());
  const double hip =
      phi - std::atan2(l2 * std::sin(ankle), l1 + l2 * std::cos(ankle));
  return {hip, ankle};
}

JointReference discretize_reference(const JointReference& continuous,
                                    int n_steps, double hip_delay) {
  if (n_steps < 1) throw ConfigError("n_steps must be >= 1");
  if (hip_delay < 0.0) throw ConfigError("hip_delay must be >= 0");
  const size_t n = continuous.size();
  if (n < 2) throw ConfigError("reference needs at least two samples");

  const double t0 = continuous.t.front();
  const double t1 = continuous.t.back();
  const double span = t1 - t0;

  auto interp = [&](const std::vector<double>& v, double t) {
    t = std::clamp(t, t0, t1);
    const auto it = std::upper_bound(continuous.t.begin(), continuous.t.end(), t);
    size_t i = std::min<size_t>(
        n - 2, static_cast<size_t>(
                   std::max<std::ptrdiff_t>(0, it - continuous.t.begin() - 1)));
    const double dt = continuous.t[i + 1] - continuous.t[i];
    const double a = dt > 0 ? (t - continuous.t[i]) / dt : 0.0;
    return (1.0 - a) * v[i] + a * v[i + 1];
  };

  // Window boundary positions; each window's constant velocity preserves its
  // displacement, so the total telescopes exactly.
  std::vector<double> bounds(n_steps + 1);
  std::vector<double> hip_b(n_steps + 1), ankle_b(n_steps + 1);
  for (int k = 0; k <= n_steps; ++k) {
    bounds[k] = t0 + span * k / n_steps;
    hip_b[k] = interp(continuous.hip_pos, bounds[k]);
    ankle_b[k] = interp(continuous.ankle_pos, bounds[k]);
  }
  const double win = span / n_steps;

  JointReference out;
  out.n_steps = n_steps;
  out.hip_delay = hip_delay;
  const double dt_out =
      span / static_cast<double>(std::max<size_t>(1, n - 1));
  const double t_end = t1 + hip_delay;
  const size_t m = static_cast<size_t>(std::ceil((t_end - t0) / dt_out)) + 1;

  auto window_of = [&](double t) {
    if (t <= t0) return 0;
    const int k = static_cast<int>((t - t0) / win);
    return std::min(k, n_steps - 1);
  };
  auto step_pos = [&](const std::vector<double>& pb, double t) {
    t = std::clamp(t, t0, t1);
    const int k = window_of(t);
    const double v = (pb[k + 1] - pb[k]) / win;
    return pb[k] + v * (t - bounds[k]);
  };
  auto step_vel = [&](const std::vector<double>& pb, double t) {
    if (t < t0 || t >= t1) return 0.0;
    const int k = window_of(t);
    return (pb[k + 1] - pb[k]) / win;
  };

  for (size_t i = 0; i < m; ++i) {
    const double t = std::min(t0 + static_cast<double>(i) * dt_out, t_end);
    out.t.push_back(t);
    out.ankle_pos.push_back(step_pos(ankle_b, t));
    out.ankle_vel.push_back(step_vel(ankle_b, t));
    const double th = t - hip_delay;  // hip channel shifted, zero-filled
    out.hip_pos.push_back(th < t0 ? hip_b.front() : step_pos(hip_b, th));
    out.hip_vel.push_back(th < t0 ? 0.0 : step_vel(hip_b, th));
    if (t >= t_end) break;
  }
  return out;
}

JointReference gait_to_joint_commands(const FootTrajectory& traj,
                                      const RobotParams& params,
                                      const GaitConfig& cfg) {
  const double duration = traj.total_duration();
  const double dt = 1.0 / cfg.sample_rate;
  const size_t n = static_cast<size_t>(std::ceil(duration / dt)) + 1;

  JointReference ref;
  ref.t.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const double t = std::min(static_cast<double>(i) * dt, duration);
    JointAngles ja = ik_leg(traj.sample(t), params);
    if (!ref.hip_pos.empty()) {
      // Unwrap so the channel stays continuous across atan2 branch cuts.
      ja.hip -= 2.0 * kPi * std::round((ja.hip - ref.hip_pos.back()) /
                                       (2.0 * kPi));
    } else {
      ja.hip -= 2.0 * kPi * std::floor(ja.hip / (2.0 * kPi));
    }
    ref.t.push_back(t);
    ref.hip_pos.push_back(ja.hip);
    ref.ankle_pos.push_back(ja.ankle);
    if (t >= duration && i + 1 < n) break;
  }
  const size_t m = ref.t.size();
  ref.hip_vel.resize(m);
  ref.ankle_vel.resize(m);
  for (size_t i = 0; i < m; ++i) {
    const size_t a = i == 0 ? 0 : i - 1;
    const size_t b = i + 1 < m ? i + 1 : i;
    const double span = ref.t[b] - ref.t[a];
    ref.hip_vel[i] = span > 0 ? (ref.hip_pos[b] - ref.hip_pos[a]) / span : 0.0;
    ref.ankle_vel[i] =
        span > 0 ? (ref.ankle_pos[b] - ref.ankle_pos[a]) / span : 0.0;
  }
  if (cfg.n_steps > 0) {
    return discretize_reference(ref, cfg.n_steps, cfg.hip_delay);
  }
  return ref;
}

SupportPolygon static_stability(const GeneralizedState& state,
                                const RobotParams& params,
                                bool toe_joint_locked) {
  const BodyKin k = forward_kinematics(state, params);
  // Feet flat: the toe segment lies on the ground plane.
  const double toe_dir = std::remainder(k.toe_angle, 2.0 * kPi);
  if (std::abs(toe_dir) > 1e-6 ||
      std::abs(k.claw.p.y() - k.toe_joint.p.y()) > 1e-9) {
    throw ConfigError("feet not flat on ground");
  }

  SupportPolygon sp;
  sp.toe_joint_locked = toe_joint_locked;
  sp.toe_joint_x = k.toe_joint.p.x();
  sp.toe_tip_x = k.claw.p.x();
  sp.back_claw_x = k.toe_joint.p.x() - params.back_claw_reach;
  sp.com_x = com_position(state, params).p.x();

  if (sp.com_x > sp.toe_tip_x) {
    sp.verdict = StabilityVerdict::kUnstableNoseDown;
  } else if (sp.com_x < sp.back_claw_x) {
    sp.verdict = StabilityVerdict::kUnstableNoseUp;
  } else if (!toe_joint_locked && sp.com_x >= sp.toe_joint_x) {
    // Ahead of the toe joint the compliant foot re-orients onto the toes.
    sp.verdict = StabilityVerdict::kStableToeSupport;
  } else {
    sp.verdict = StabilityVerdict::kStablePalmSupport;
  }
  return sp;
}

}  // namespace legsim
