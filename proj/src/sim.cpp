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

#include "legsim/sim.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace legsim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kToeSaturation:
      return "toe_saturation";
    case EventKind::kTakeOff:
      return "take_off";
    case EventKind::kTouchdown:
      return "touchdown";
    case EventKind::kStop:
      return "stop";
  }
  return "?";
}

GeneralizedState make_initial_state(double pitch, double hip, double ankle,
                                    double toe_deflection) {
  GeneralizedState s;
  s.q << 0.0, 0.0, pitch, hip, ankle, toe_deflection;
  return s;
}

Scenario default_scenario() {
  Scenario sc;
  sc.initial = make_initial_state(deg2rad(10.0), deg2rad(135.0),
                                  deg2rad(145.0), deg2rad(25.0));
  return sc;
}

SimContext make_context(const Scenario& scenario) {
  SimContext ctx;
  ctx.ref = make_takeoff_reference(scenario.initial, scenario.params,
                                   scenario.controller);
  const BodyKin k = forward_kinematics(scenario.initial, scenario.params);
  ctx.ground_y = std::min(k.claw.p.y(), k.toe_joint.p.y());
  return ctx;
}

namespace {

using State12 = Eigen::Matrix<double, 12, 1>;

State12 pack(const GeneralizedState& s) {
  State12 y;
  y << s.q, s.qd;
  return y;
}

GeneralizedState unpack(const State12& y) {
  GeneralizedState s;
  s.q = y.head<6>();
  s.qd = y.tail<6>();
  return s;
}

struct Stepper {
  const Scenario& sc;
  SimContext& ctx;

  Vec2 torque(double t, const GeneralizedState& s, ContactMode mode) const {
    if (ctx.torque_override) return ctx.torque_override(t, s, mode);
    if (mode == ContactMode::kAirborne) {
      return hold_controller(s, ctx.hold_joints, sc.controller, sc.params);
    }
    return takeoff_controller(s, sc.params, sc.controller, ctx.ref, t, mode);
  }

  StepDiagnostics diagnose(double t, const GeneralizedState& s,
                           ContactMode mode) const {
    StepDiagnostics d;
    d.tau = torque(t, s, mode);
    ActuationInput u;
    u.thrust_level = sc.thrust.level_at(t);
    u.tail_surface = sc.elevator_trim;
    u.wing_surface = sc.aileron_trim;
    if (mode == ContactMode::kAirborne) {
      d.qdd = flight_accel(s, d.tau, u, sc.params, sc.forces);
    } else {
      StanceOptions opts;
      opts.baumgarte_omega = sc.integration.baumgarte_omega;
      opts.anchor = ctx.anchor;
      const StanceAccel sa =
          constrained_accel(s, d.tau, u, sc.params, mode, sc.forces, opts);
      d.qdd = sa.qdd;
      d.f_c = sa.contact_force;
    }
    d.power = std::abs(d.tau[0] * s.qd[3]) + std::abs(d.tau[1] * s.qd[4]);
    return d;
  }

  State12 deriv(double t, const State12& y, ContactMode mode) const {
    const GeneralizedState s = unpack(y);
    const StepDiagnostics d = diagnose(t, s, mode);
    State12 dy;
    dy << s.qd, d.qdd;
    return dy;
  }

  State12 rk4(double t, const State12& y, double h, ContactMode mode) const {
    const State12 k1 = deriv(t, y, mode);
    const State12 k2 = deriv(t + 0.5 * h, y + 0.5 * h * k1, mode);
    const State12 k3 = deriv(t + 0.5 * h, y + 0.5 * h * k2, mode);
    const State12 k4 = deriv(t + h, y + h * k3, mode);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }

  // Embedded Cash-Karp 4(5) pair for the adaptive path.
  State12 rk45(double t, const State12& y, double h, ContactMode mode,
               double* err) const {
    static const double a[6] = {0, 0.2, 0.3, 0.6, 1.0, 0.875};
    static const double b2[] = {0.2};
    static const double b3[] = {3.0 / 40, 9.0 / 40};
    static const double b4[] = {0.3, -0.9, 1.2};
    static const double b5[] = {-11.0 / 54, 2.5, -70.0 / 27, 35.0 / 27};
    static const double b6[] = {1631.0 / 55296, 175.0 / 512, 575.0 / 13824,
                                44275.0 / 110592, 253.0 / 4096};
    static const double c5[6] = {37.0 / 378,  0, 250.0 / 621,
                                 125.0 / 594, 0, 512.0 / 1771};
    static const double c4[6] = {2825.0 / 27648,  0,             18575.0 / 48384,
                                 13525.0 / 55296, 277.0 / 14336, 0.25};
    State12 k[6];
    k[0] = deriv(t, y, mode);
    k[1] = deriv(t + a[1] * h, y + h * (b2[0] * k[0]), mode);
    k[2] = deriv(t + a[2] * h, y + h * (b3[0] * k[0] + b3[1] * k[1]), mode);
    k[3] = deriv(t + a[3] * h,
                 y + h * (b4[0] * k[0] + b4[1] * k[1] + b4[2] * k[2]), mode);
    k[4] = deriv(t + a[4] * h,
                 y + h * (b5[0] * k[0] + b5[1] * k[1] + b5[2] * k[2] +
                          b5[3] * k[3]),
                 mode);
    k[5] = deriv(t + a[5] * h,
                 y + h * (b6[0] * k[0] + b6[1] * k[1] + b6[2] * k[2] +
                          b6[3] * k[3] + b6[4] * k[4]),
                 mode);
    State12 y5 = y, y4 = y;
    for (int i = 0; i < 6; ++i) {
      y5 += h * c5[i] * k[i];
      y4 += h * c4[i] * k[i];
    }
    *err = (y5 - y4).cwiseAbs().maxCoeff();
    return y5;
  }

  // Integrates exactly dt under a fixed mode.
  State12 segment(double t, const State12& y, double dt,
                  ContactMode mode) const {
    if (sc.integration.method == IntegratorKind::kRk4) {
      return rk4(t, y, dt, mode);
    }
    State12 cur = y;
    double done = 0.0;
    double h = dt;
    int guard = 0;
    while (done < dt && ++guard < 100000) {
      h = std::min(h, dt - done);
      double err = 0.0;
      const State12 trial = rk45(t + done, cur, h, mode, &err);
      if (err <= sc.integration.rk45_tol || h <= 1e-9) {
        cur = trial;
        done += h;
        const double grow =
            err > 0 ? 0.9 * std::pow(sc.integration.rk45_tol / err, 0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
      } else {
        h *= std::max(0.2, 0.9 * std::pow(sc.integration.rk45_tol / err, 0.25));
      }
    }
    return cur;
  }
};

double net_vertical(const StepDiagnostics& d) {
  double fz = 0.0;
  for (int i = 0; i + 1 < d.f_c.size(); i += 2) fz += d.f_c[i + 1];
  return fz;
}

double lowest_foot_y(const GeneralizedState& s, const RobotParams& p) {
  const BodyKin k = forward_kinematics(s, p);
  return std::min(k.claw.p.y(), k.toe_joint.p.y());
}

}  // namespace

std::optional<EventKind> detect_events(const GeneralizedState& prev,
                                       const StepDiagnostics& prev_diag,
                                       const GeneralizedState& next,
                                       const StepDiagnostics& next_diag,
                                       ContactMode mode,
                                       const RobotParams& params,
                                       double ground_y) {
  if (mode == ContactMode::kAirborne) {
    // The foot leaves the ground at exactly zero height, so touchdown needs
    // real penetration, not release jitter.
    const double pen = 3e-3;
    const double g0 = (ground_y - pen) - lowest_foot_y(prev, params);
    const double g1 = (ground_y - pen) - lowest_foot_y(next, params);
    if (g0 <= 0.0 && g1 > 0.0) return EventKind::kTouchdown;
    return std::nullopt;
  }
  if (mode == ContactMode::kFlatToe) {
    const double g0 = prev.q[5] - params.toe_deflection_max;
    const double g1 = next.q[5] - params.toe_deflection_max;
    if (g0 <= 0.0 && g1 > 0.0) return EventKind::kToeSaturation;
  }
  // Lift-off: the net vertical ground reaction crosses zero downward.
  const double fz0 = net_vertical(prev_diag);
  const double fz1 = net_vertical(next_diag);
  if (fz0 > 0.0 && fz1 <= 0.0) return EventKind::kTakeOff;
  return std::nullopt;
}

StepDiagnostics step(GeneralizedState* state, ContactMode* mode, double* t,
                     const Scenario& scenario, SimContext* ctx,
                     std::vector<Event>* events) {
  Stepper st{scenario, *ctx};
  double remaining = scenario.integration.step;
  StepDiagnostics diag = st.diagnose(*t, *state, *mode);

  int guard = 0;
  while (remaining > 0.0 && ++guard < 16) {
    const State12 y0 = pack(*state);
    const double t0 = *t;
    const GeneralizedState s0 = *state;
    const StepDiagnostics d0 = diag;

    auto probe = [&](double dt) {
      struct Probe {
        GeneralizedState s;
        StepDiagnostics d;
        std::optional<EventKind> fired;
      } pr;
      const State12 y = st.segment(t0, y0, dt, *mode);
      if (!y.allFinite()) {
        std::ostringstream msg;
        msg << "integration diverged at t=" << t0
            << " (last good state retained)";
        throw NumericsError(msg.str());
      }
      pr.s = unpack(y);
      pr.d = st.diagnose(t0 + dt, pr.s, *mode);
      pr.fired = detect_events(s0, d0, pr.s, pr.d, *mode, scenario.params,
                               ctx->ground_y);
      return pr;
    };

    auto full = probe(remaining);
    double advance = remaining;
    std::optional<EventKind> fired = full.fired;
    if (fired) {
      // Bisect the crossing to the configured time tolerance.
      double lo = 0.0, hi = remaining;
      auto at_hi = full;
      while (hi - lo > scenario.integration.event_tol) {
        const double mid = 0.5 * (lo + hi);
        auto pm = probe(mid);
        if (pm.fired) {
          hi = mid;
          at_hi = pm;
          fired = pm.fired;
        } else {
          lo = mid;
        }
      }
      advance = hi;
      full = at_hi;
    }

    ctx->energy += 0.5 * (d0.power + full.d.power) * advance;
    *state = full.s;
    *t = t0 + advance;
    remaining -= advance;
    diag = full.d;

    if (!fired) break;

    Event ev;
    ev.kind = *fired;
    ev.t = *t;
    ev.state = *state;
    ev.mode_before = *mode;
    switch (*fired) {
      case EventKind::kToeSaturation:
        *mode = ContactMode::kToeTip;
        if (ctx->anchor && ctx->anchor->size() == 4) {
          ctx->anchor = VecX(ctx->anchor->tail(2));
        } else {
          ctx->anchor = constraint_positions(*state, scenario.params, *mode);
        }
        break;
      case EventKind::kTakeOff:
        *mode = ContactMode::kAirborne;
        ctx->anchor.reset();
        ctx->took_off = true;
        ctx->hold_joints = Vec2(state->q[3], state->q[4]);
        break;
      case EventKind::kTouchdown:
      case EventKind::kStop:
        break;
    }
    ev.mode_after = *mode;
    if (events) events->push_back(ev);
    if (*fired == EventKind::kTouchdown) break;
    diag = st.diagnose(*t, *state, *mode);
  }
  return diag;
}

namespace {

struct Runner {
  const Scenario& sc;
  TrajectoryLog& log;
  SimContext& ctx;
  GeneralizedState state;
  ContactMode mode = ContactMode::kFlatToe;
  double t = 0.0;
  long step_index = 0;
  long log_every = 1;
  double max_com_y = -1e30;

  StepDiagnostics diagnose_now() const {
    return Stepper{sc, ctx}.diagnose(t, state, mode);
  }

  void sample(const StepDiagnostics& d) {
    LogSample s;
    s.t = t;
    s.q = state.q;
    s.qd = state.qd;
    s.qdd = d.qdd;
    s.tau = d.tau;
    s.f_c = d.f_c;
    for (int i = 0; i + 1 < d.f_c.size(); i += 2) {
      s.f_net += Vec2(d.f_c[i], d.f_c[i + 1]);
    }
    s.mode = mode;
    const PointKin com = com_position(state, sc.params);
    s.com = com.p;
    s.vcom = com.v;
    s.power = d.power;
    s.energy = ctx.energy;
    log.samples.push_back(std::move(s));
  }

  void track(const StepDiagnostics& d) {
    const PointKin com = com_position(state, sc.params);
    max_com_y = std::max(max_com_y, com.p.y());
    if (!ctx.took_off) {
      log.summary.peak_joint_speed =
          std::max({log.summary.peak_joint_speed, std::abs(state.qd[3]),
                    std::abs(state.qd[4])});
      log.summary.peak_torque = std::max(
          {log.summary.peak_torque, std::abs(d.tau[0]), std::abs(d.tau[1])});
      log.summary.max_toe_deflection =
          std::max(log.summary.max_toe_deflection, state.q[5]);
    }
  }

  // Advances n nominal steps; returns false when the run must stop early.
  bool advance(long n_steps) {
    for (long i = 0; i < n_steps; ++i) {
      std::vector<Event> new_events;
      const StepDiagnostics d = step(&state, &mode, &t, sc, &ctx, &new_events);
      ++step_index;
      for (Event& ev : new_events) {
        if (ev.kind == EventKind::kTakeOff && !log.summary.took_off) {
          const PointKin com = com_position(ev.state, sc.params);
          const PointKin com0 = com_position(sc.initial, sc.params);
          log.summary.took_off = true;
          log.summary.t_takeoff = ev.t;
          log.summary.takeoff_velocity = com.v;
          log.summary.takeoff_speed = com.v.norm();
          log.summary.pitch_at_takeoff = ev.state.q[2];
          log.summary.pitch_rate_at_takeoff = ev.state.qd[2];
          log.summary.com_height_at_takeoff = com.p.y() - com0.p.y();
          log.summary.energy_at_takeoff = ctx.energy;
        }
        log.events.push_back(ev);
      }
      track(d);
      if (step_index % log_every == 0) sample(d);
      log.final_state = state;
      log.final_t = t;
      log.final_mode = mode;
      if (!log.events.empty() &&
          log.events.back().kind == EventKind::kTouchdown) {
        return false;
      }
    }
    return true;
  }
};

void validate_scenario(const Scenario& sc) {
  sc.params.validate();
  if (!(sc.integration.duration > 0.0)) {
    throw ConfigError("duration must be > 0");
  }
  if (!(sc.integration.step > 0.0) || sc.integration.step > 5e-3) {
    throw ConfigError("step size must be in (0, 5e-3] s");
  }
  if (!sc.initial.finite()) throw ConfigError("initial state not finite");
}

void push_stop(TrajectoryLog* log, const Runner& r) {
  Event stop;
  stop.kind = EventKind::kStop;
  stop.t = r.t;
  stop.state = r.state;
  stop.mode_before = stop.mode_after = r.mode;
  log->events.push_back(stop);
}

}  // namespace

TrajectoryLog run_takeoff(const Scenario& scenario) {
  validate_scenario(scenario);
  TrajectoryLog log;
  SimContext ctx = make_context(scenario);
  log.ground_y = ctx.ground_y;
  ctx.anchor = constraint_positions(scenario.initial, scenario.params,
                                    ContactMode::kFlatToe);

  Runner r{scenario, log, ctx};
  r.state = scenario.initial;
  r.mode = ContactMode::kFlatToe;
  const double h = scenario.integration.step;
  r.log_every = std::max<long>(
      1, std::lround(1.0 / (scenario.integration.log_rate * h)));

  const StepDiagnostics d0 = r.diagnose_now();
  r.track(d0);
  r.sample(d0);
  log.final_state = r.state;

  const long n = std::lround(scenario.integration.duration / h);
  r.advance(n);
  push_stop(&log, r);
  log.summary.apex_com_height = r.max_com_y - log.ground_y;
  return log;
}

TrajectoryLog run_flight(TrajectoryLog log, const Scenario& scenario) {
  const Event* takeoff = log.find(EventKind::kTakeOff);
  if (!takeoff) throw ConfigError("run_flight requires a TakeOff event");
  if (log.find(EventKind::kTouchdown)) return log;

  SimContext ctx = make_context(scenario);
  ctx.took_off = true;
  ctx.hold_joints = Vec2(takeoff->state.q[3], takeoff->state.q[4]);
  ctx.energy = log.samples.empty() ? 0.0 : log.samples.back().energy;

  // The run continues; drop the trailing stop marker.
  while (!log.events.empty() && log.events.back().kind == EventKind::kStop) {
    log.events.pop_back();
  }

  const double h = scenario.integration.step;
  Runner r{scenario, log, ctx};
  r.state = log.final_state;
  r.mode = log.final_mode;
  r.t = log.final_t;
  r.step_index = std::lround(log.final_t / h);
  r.log_every = std::max<long>(
      1, std::lround(1.0 / (scenario.integration.log_rate * h)));
  r.max_com_y = log.ground_y + log.summary.apex_com_height;

  const double t_end = takeoff->t + scenario.flight_horizon;
  const long n = std::lround((t_end - r.t) / h);
  if (n > 0) r.advance(n);
  push_stop(&log, r);
  log.summary.apex_com_height = r.max_com_y - log.ground_y;
  return log;
}

std::vector<SweepCell> sweep(const Scenario& base,
                             const std::vector<SweepAxis>& grid,
                             bool parallel) {
  if (grid.empty()) throw ConfigError("sweep grid is empty");
  long total = 1;
  for (const auto& axis : grid) {
    if (axis.values.empty()) throw ConfigError("sweep axis has no values");
    total *= static_cast<long>(axis.values.size());
  }

  auto cell_overrides = [&](long index) {
    std::vector<std::pair<std::string, double>> ov;
    long rem = index;
    for (const auto& axis : grid) {
      const long n = static_cast<long>(axis.values.size());
      ov.emplace_back(axis.key, axis.values[rem % n]);
      rem /= n;
    }
    return ov;
  };

  auto run_cell = [&](long index) {
    SweepCell cell;
    cell.overrides = cell_overrides(index);
    try {
      Scenario sc = base;
      for (const auto& [key, value] : cell.overrides) {
        apply_override(&sc, key, value);
      }
      TrajectoryLog log = run_takeoff(sc);
      if (log.find(EventKind::kTakeOff)) {
        log = run_flight(std::move(log), sc);
      }
      cell.summary = log.summary;
      const double joint_limit =
          sc.params.motor_max_speed / sc.params.gear_ratio;
      cell.feasible = cell.summary.took_off &&
                      cell.summary.peak_joint_speed <= joint_limit;
    } catch (const std::exception& e) {
      cell.failed = true;
      cell.error = e.what();
    }
    return cell;
  };

  std::vector<SweepCell> cells(static_cast<size_t>(total));
  if (parallel) {
    std::vector<std::future<SweepCell>> futures;
    futures.reserve(static_cast<size_t>(total));
    for (long i = 0; i < total; ++i) {
      futures.push_back(
          std::async(std::launch::async, [&, i] { return run_cell(i); }));
    }
    for (long i = 0; i < total; ++i) {
      cells[static_cast<size_t>(i)] = futures[static_cast<size_t>(i)].get();
    }
  } else {
    for (long i = 0; i < total; ++i) {
      cells[static_cast<size_t>(i)] = run_cell(i);
    }
  }
  return cells;
}

void apply_override(Scenario* scenario, const std::string& key, double value) {
  RobotParams& p = scenario->params;
  if (key == "Gear ratio") {
    p.gear_ratio = value;
  } else if (key == "Motor max speed") {
    p.motor_max_speed = value;
  } else if (key == "Motor max torque") {
    p.motor_max_torque = value;
  } else if (key == "Motor max power") {
    p.motor_max_power = value;
  } else if (key == "Ankle spring constant") {
    p.ankle_spring = value;
  } else if (key == "Toe spring constant") {
    p.toe_spring = value;
  } else if (key == "Max thrust") {
    p.max_thrust = value;
  } else if (key == "ramp time") {
    scenario->controller.ramp_time = value;
  } else if (key == "horizontal kp") {
    scenario->controller.horizontal_kp = value;
  } else if (key == "horizontal kd") {
    scenario->controller.horizontal_kd = value;
  } else if (key == "vertical kp") {
    scenario->controller.vertical_kp = value;
  } else if (key == "vertical kd") {
    scenario->controller.vertical_kd = value;
  } else if (key == "pitch kp") {
    scenario->controller.pitch_kp = value;
  } else if (key == "pitch kd") {
    scenario->controller.pitch_kd = value;
  } else if (key == "takeoff speed") {
    scenario->controller.takeoff_speed = value;
  } else if (key == "jump elevation") {
    scenario->controller.jump_elevation = value;
    scenario->controller.jump_elevation_auto = false;
  } else if (key == "thrust level") {
    scenario->thrust.points = {{0.0, value}};
  } else if (key == "step size") {
    scenario->integration.step = value;
  } else {
    throw ConfigError("unknown sweep/override key: " + key);
  }
}

}  // namespace legsim
