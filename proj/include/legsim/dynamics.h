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

#ifndef LEGSIM_DYNAMICS_H_
#define LEGSIM_DYNAMICS_H_

#include <optional>

#include "legsim/kinematics.h"
#include "legsim/types.h"

namespace legsim {

// Actuation-side inputs other than the leg joint torques.
struct ActuationInput {
  double thrust_level = 0.0;  // 0..1 of max thrust
  double wing_surface = 0.0;  // symmetric aileron deflection (rad)
  double tail_surface = 0.0;  // elevator deflection (rad)
};

enum class AeroModel { kFlatPlate, kThinAirfoilWithStall };

// Which force channels are active and how the lifting surfaces are modeled.
struct ForceConfig {
  bool thrust = true;
  bool aero = true;
  bool aero_in_stance = true;  // wings/tail also act during ground contact
  bool ankle_spring = true;
  bool toe_spring = true;
  bool toe_stop = true;        // toe-joint travel-limit end stop
  bool joint_damping = true;   // viscous loss at the passive toe joint
  AeroModel aero_model = AeroModel::kFlatPlate;
};

// Selection matrix mapping (tau_hip, tau_ankle) into the q4, q5 coordinates.
Eigen::Matrix<double, 2, 6> actuation_selection();

struct DynamicsTerms {
  Mat6 M = Mat6::Zero();
  Vec6 bias = Vec6::Zero();  // C(q,qd) qd + g(q)
  Eigen::Matrix<double, 2, 6> S = actuation_selection();
};

Mat6 mass_matrix(const GeneralizedState& state, const RobotParams& params);

// Velocity-product matrix with the usual structure property: Mdot - 2C is
// skew-symmetric.
Mat6 coriolis_matrix(const GeneralizedState& state, const RobotParams& params);

// Gradient of the gravitational potential (enters the left side of the
// equations of motion, so free fall gives qdd2 < 0).
Vec6 gravity_vector(const GeneralizedState& state, const RobotParams& params);

Vec6 bias_forces(const GeneralizedState& state, const RobotParams& params);

DynamicsTerms dynamics_terms(const GeneralizedState& state,
                             const RobotParams& params);

struct ExternalForces {
  Vec2 f_propeller = Vec2::Zero();  // world frame, applied at the reference point
  Vec2 f_wing = Vec2::Zero();       // world frame, applied at the wing center
  Vec2 f_tail = Vec2::Zero();       // world frame, applied at the tail center
  double tau_ankle_spring = 0.0;    // joint torque on q5
  double tau_toe_spring = 0.0;      // joint torque on q6
  double tau_toe_stop = 0.0;        // end-stop torque on q6
  Vec6 generalized = Vec6::Zero();  // all of the above mapped through J^T
};

ExternalForces external_forces(const GeneralizedState& state,
                               const ActuationInput& u,
                               const RobotParams& params,
                               const ForceConfig& cfg = ForceConfig{});

// Options for the constrained (stance) solve.  Baumgarte feedback acts on the
// acceleration-level constraint; anchor is the pinned world position of the
// constraint points captured at mode entry (no position feedback without it).
struct StanceOptions {
  double baumgarte_omega = 100.0;  // 1/s; gains are (2w, w^2)
  std::optional<VecX> anchor;
};

struct StanceAccel {
  Vec6 qdd = Vec6::Zero();
  VecX contact_force;  // ground reaction on the foot, stacked per point
};

// Solves the stance KKT system for accelerations and contact reactions.
// Throws NumericsError("constraint degeneracy ...") when the system is
// singular.
StanceAccel constrained_accel(const GeneralizedState& state, const Vec2& tau,
                              const ActuationInput& u,
                              const RobotParams& params, ContactMode mode,
                              const ForceConfig& fcfg = ForceConfig{},
                              const StanceOptions& opts = StanceOptions{});

// Unconstrained (flight) accelerations.
Vec6 flight_accel(const GeneralizedState& state, const Vec2& tau,
                  const ActuationInput& u, const RobotParams& params,
                  const ForceConfig& fcfg = ForceConfig{});

// Energy bookkeeping.
double kinetic_energy(const GeneralizedState& state, const RobotParams& params);
double gravitational_energy(const GeneralizedState& state,
                            const RobotParams& params);
double spring_energy(const GeneralizedState& state, const RobotParams& params,
                     const ForceConfig& fcfg = ForceConfig{});

}  // namespace legsim

#endif  // LEGSIM_DYNAMICS_H_
