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

#ifndef LEGSIM_SIM_H_
#define LEGSIM_SIM_H_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legsim/control.h"
#include "legsim/dynamics.h"
#include "legsim/types.h"

namespace legsim {

// Piecewise-constant thrust level over time.
struct ThrustSchedule {
  // Half throttle while the propeller spools up during the jump, trimmed
  // back once airborne.
  std::vector<std::pair<double, double>> points = {{0.0, 0.5},
                                                   {0.2, 0.0}};  // (t, level)

  double level_at(double t) const {
    double level = 0.0;
    for (const auto& [t0, v] : points) {
      if (t + 1e-12 >= t0) level = v;
    }
    return level;
  }
};

enum class IntegratorKind { kRk4, kRk45 };

struct IntegrationConfig {
  double step = 1e-4;             // s, fixed RK4 step
  double duration = 0.45;         // s simulated by run_takeoff
  IntegratorKind method = IntegratorKind::kRk4;
  double rk45_tol = 1e-9;         // local error tolerance for the adaptive path
  double baumgarte_omega = 100.0; // 1/s
  double log_rate = 1000.0;       // Hz
  double event_tol = 1e-6;        // s, event localization tolerance
};

struct Scenario {
  RobotParams params;
  GeneralizedState initial;
  ControlConfig controller;
  ForceConfig forces;
  ThrustSchedule thrust;
  IntegrationConfig integration;
  double flight_horizon = 1.0;   // s of flight kept after take-off
  double elevator_trim = 0.0;    // fixed tail-surface deflection (rad)
  double aileron_trim = 0.0;     // fixed wing-surface deflection (rad)
};

GeneralizedState make_initial_state(double pitch, double hip, double ankle,
                                    double toe_deflection);

// Table-default scenario: crouched posture, all force channels on.
Scenario default_scenario();

enum class EventKind { kToeSaturation, kTakeOff, kTouchdown, kStop };

const char* to_string(EventKind kind);

struct Event {
  EventKind kind = EventKind::kStop;
  double t = 0.0;
  GeneralizedState state;
  ContactMode mode_before = ContactMode::kAirborne;
  ContactMode mode_after = ContactMode::kAirborne;
};

struct LogSample {
  double t = 0.0;
  Vec6 q = Vec6::Zero();
  Vec6 qd = Vec6::Zero();
  Vec6 qdd = Vec6::Zero();
  Vec2 tau = Vec2::Zero();
  VecX f_c;                  // stacked reactions (empty when airborne)
  Vec2 f_net = Vec2::Zero(); // summed reaction
  ContactMode mode = ContactMode::kFlatToe;
  Vec2 com = Vec2::Zero();
  Vec2 vcom = Vec2::Zero();
  double power = 0.0;   // sum |tau_j * qd_j| over actuated joints
  double energy = 0.0;  // cumulative actuation energy
};

struct TakeoffSummary {
  bool took_off = false;
  double t_takeoff = 0.0;
  double takeoff_speed = 0.0;
  Vec2 takeoff_velocity = Vec2::Zero();
  double pitch_at_takeoff = 0.0;
  double pitch_rate_at_takeoff = 0.0;
  double com_height_at_takeoff = 0.0;  // above the initial mass center
  double peak_joint_speed = 0.0;       // rad/s, stance phase
  double peak_torque = 0.0;            // N*m
  double energy_at_takeoff = 0.0;      // J, actuation energy proxy
  double apex_com_height = 0.0;        // above ground, includes flight
  double max_toe_deflection = 0.0;     // rad
};

struct TrajectoryLog {
  std::vector<LogSample> samples;
  std::vector<Event> events;
  TakeoffSummary summary;
  double ground_y = 0.0;
  // Exact integrator end point (the sample grid may stop short of it).
  GeneralizedState final_state;
  double final_t = 0.0;
  ContactMode final_mode = ContactMode::kFlatToe;

  const Event* find(EventKind kind) const {
    for (const Event& e : events) {
      if (e.kind == kind) return &e;
    }
    return nullptr;
  }
};

// Torque source evaluated inside integrator stages: (t, state, mode) -> tau.
using TorqueFn =
    std::function<Vec2(double, const GeneralizedState&, ContactMode)>;

// Mutable per-run data threaded through steps.
struct SimContext {
  TakeoffReference ref;
  double ground_y = 0.0;
  std::optional<VecX> anchor;          // pinned constraint positions
  Vec2 hold_joints = Vec2::Zero();     // flight joint-hold targets
  bool took_off = false;
  double energy = 0.0;                 // cumulative actuation energy (J)
  TorqueFn torque_override;            // replaces the built-in controller
};

SimContext make_context(const Scenario& scenario);

struct StepDiagnostics {
  Vec2 tau = Vec2::Zero();
  Vec6 qdd = Vec6::Zero();
  VecX f_c;
  double power = 0.0;
};

// Advances exactly one nominal step (integration.step), localizing any event
// crossing inside it by bisection, switching mode, and continuing through the
// remainder.  Appends events; returns diagnostics at the end of the step.
// Throws NumericsError("integration diverged ...") on non-finite states.
StepDiagnostics step(GeneralizedState* state, ContactMode* mode, double* t,
                     const Scenario& scenario, SimContext* ctx,
                     std::vector<Event>* events);

// Event check between two diagnosed states; returns the triggered kind.
std::optional<EventKind> detect_events(const GeneralizedState& prev,
                                       const StepDiagnostics& prev_diag,
                                       const GeneralizedState& next,
                                       const StepDiagnostics& next_diag,
                                       ContactMode mode,
                                       const RobotParams& params,
                                       double ground_y);

// Full jumping take-off run: stance under the take-off controller, flight
// with joint hold after lift-off, logged at the configured rate.
TrajectoryLog run_takeoff(const Scenario& scenario);

// Extends a take-off log through t_takeoff + flight_horizon (or touchdown).
TrajectoryLog run_flight(TrajectoryLog log, const Scenario& scenario);

// One swept parameter axis; keys use the scenario/config key names.
struct SweepAxis {
  std::string key;
  std::vector<double> values;
};

struct SweepCell {
  std::vector<std::pair<std::string, double>> overrides;
  TakeoffSummary summary;
  bool feasible = false;  // joint speed within motor_max_speed / gear_ratio
  bool failed = false;
  std::string error;
};

std::vector<SweepCell> sweep(const Scenario& base,
                             const std::vector<SweepAxis>& grid,
                             bool parallel = true);

// Applies a named scalar override ("Gear ratio", "Ankle spring constant",
// "ramp time", ...) to a scenario.  Throws ConfigError for unknown keys.
void apply_override(Scenario* scenario, const std::string& key, double value);

}  // namespace legsim

#endif  // LEGSIM_SIM_H_
