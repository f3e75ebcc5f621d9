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

#ifndef LEGSIM_GAITS_H_
#define LEGSIM_GAITS_H_

#include <string>
#include <vector>

#include "legsim/types.h"

namespace legsim {

enum class GaitMode { kJumpTakeoff, kWalk, kHeightJump, kForwardHop };

const char* to_string(GaitMode mode);
GaitMode gait_mode_from_string(const std::string& s);

// One phase of a foot path: named, timed, cubic through hip-frame waypoints
// with zero end velocities.
struct GaitPhase {
  std::string name;
  double duration = 0.0;        // s
  std::vector<Vec2> waypoints;  // hip frame (m), uniformly spaced in time
};

struct FootTrajectory {
  GaitMode mode = GaitMode::kWalk;
  std::vector<GaitPhase> phases;

  double total_duration() const;
  Vec2 sample(double t) const;  // clamped to [0, total_duration]
  const GaitPhase* phase(const std::string& name) const;
};

// Net body-propelling direction of a named phase: minus the foot displacement.
Vec2 push_direction(const FootTrajectory& traj, const std::string& phase_name);

struct GaitConfig {
  GaitMode mode = GaitMode::kWalk;
  double stand_height = 0.15;   // hip height above ground while walking (m)
  double stride = 0.08;         // walk stroke length (m)
  double clearance = 0.03;      // swing foot lift (m)
  double cycle_time = 0.6957;   // walk cycle (s); default gives 0.23 m/s stance
  double foot_offset = -0.02;   // neutral foot x under the hip (m)
  double extension = 0.95;      // push-off reach as a fraction of l1+l2
  double push_time = 0.17;      // push-off phase duration (s)
  double jump_angle = deg2rad(46.0);   // push direction, body frame
  double height_jump_angle = deg2rad(60.0);
  double hop_angle = deg2rad(40.0);
  int n_steps = 0;              // velocity discretization steps (0 = off)
  double hip_delay = 0.0;       // s
  double sample_rate = 500.0;   // Hz for joint command generation
};

FootTrajectory gen_trajectory(GaitMode mode, const GaitConfig& cfg,
                              const RobotParams& params);

// Closed-form two-link leg inverse kinematics in the hip (body) frame.
// The default branch bends the ankle backward (bird-like).  Throws
// ConfigError for unreachable targets, naming the nearest reachable point.
struct JointAngles {
  double hip = 0.0;    // q4
  double ankle = 0.0;  // q5
};

JointAngles ik_leg(const Vec2& target, const RobotParams& params,
                   bool bend_backward = true);

// Foot position in the hip frame for given joint angles (two-link only).
Vec2 fk_leg(const JointAngles& joints, const RobotParams& params);

// Time-stamped hip/ankle references.  After discretization the velocity
// channels are piecewise-constant; positions stay continuous.
struct JointReference {
  std::vector<double> t;
  std::vector<double> hip_pos, hip_vel;
  std::vector<double> ankle_pos, ankle_vel;
  int n_steps = 0;
  double hip_delay = 0.0;

  size_t size() const { return t.size(); }
};

// Replaces each velocity profile by n_steps piecewise-constant values that
// preserve total displacement exactly; the hip channel is shifted by
// hip_delay with zero-fill.
JointReference discretize_reference(const JointReference& continuous,
                                    int n_steps, double hip_delay);

JointReference gait_to_joint_commands(const FootTrajectory& traj,
                                      const RobotParams& params,
                                      const GaitConfig& cfg);

enum class StabilityVerdict {
  kStableToeSupport,
  kStablePalmSupport,
  kUnstableNoseDown,
  kUnstableNoseUp,
};

const char* to_string(StabilityVerdict v);

struct SupportPolygon {
  double back_claw_x = 0.0;
  double toe_joint_x = 0.0;
  double toe_tip_x = 0.0;
  double com_x = 0.0;
  StabilityVerdict verdict = StabilityVerdict::kStablePalmSupport;
  bool toe_joint_locked = false;
};

// Static support analysis of the flat-footed stance.  Requires the toe
// segment flat on the ground (throws ConfigError otherwise).
SupportPolygon static_stability(const GeneralizedState& state,
                                const RobotParams& params,
                                bool toe_joint_locked = false);

}  // namespace legsim

#endif  // LEGSIM_GAITS_H_
