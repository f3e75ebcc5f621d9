// Acceptance suite: runs every design criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit code is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "helpers.h"
#include "legsim/config.h"
#include "legsim/control.h"
#include "legsim/dynamics.h"
#include "legsim/gaits.h"
#include "legsim/log_io.h"
#include "legsim/metrics.h"
#include "legsim/sim.h"

using namespace legsim;
using legsim::testing::random_state;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %d: %-28s  %s\n", pass ? "PASS" : "FAIL",
              criterion, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string data_path(const std::string& name) {
  return std::string(LEGSIM_DATA_DIR) + "/" + name;
}

ForceConfig passive_forces() {
  ForceConfig fc;
  fc.thrust = fc.aero = fc.ankle_spring = fc.toe_spring = fc.toe_stop = false;
  fc.joint_damping = false;
  return fc;
}

char buf[512];

// ---------------------------------------------------------------------------

void criterion_1_takeoff_speed(const TrajectoryLog& log, double wall_s) {
  const TakeoffSummary& s = log.summary;
  const bool pass = s.took_off && std::abs(s.takeoff_speed - 2.5) <= 0.15 &&
                    std::abs(s.pitch_rate_at_takeoff) < 0.5 && wall_s < 10.0;
  std::snprintf(buf, sizeof buf,
                "v=%.3f m/s (2.5+-0.15), |pitch rate|=%.3f rad/s (<0.5), "
                "runtime=%.2f s (<10)",
                s.takeoff_speed, std::abs(s.pitch_rate_at_takeoff), wall_s);
  report(1, "take-off speed", pass, buf);
}

void criterion_2_joint_speed(const TrajectoryLog& log) {
  const double peak = rad2deg(log.summary.peak_joint_speed);
  const double bound = gear_ratio_bound(deg2rad(99900.0), deg2rad(4384.0));
  const bool pass = std::abs(peak - 4384.0) <= 0.15 * 4384.0 &&
                    std::abs(bound - 22.8) < 0.05;
  std::snprintf(buf, sizeof buf,
                "peak joint speed=%.0f deg/s (4384+-15%%), gear bound=%.1f "
                "(22.8)",
                peak, bound);
  report(2, "joint-speed requirement", pass, buf);
}

void criterion_3_power_sizing() {
  const double p = takeoff_power(0.6, 2.5);
  const bool pass = std::abs(p - 14.715) < 1e-12;
  std::snprintf(buf, sizeof buf, "P = 0.6*9.81*2.5 = %.3f W (14.7 W)", p);
  report(3, "take-off power sizing", pass, buf);
}

void criterion_4_ankle_spring() {
  Scenario sc = default_scenario();
  sc.thrust.points = {{0.0, 0.0}};
  sc.params.motor_max_power = 10.0;
  sc.controller.takeoff_speed = 3.0;
  sc.controller.ramp_time = 3.0 / 14.0;
  sc.controller.jump_elevation = deg2rad(60.0);
  sc.controller.jump_elevation_auto = false;
  sc.controller.vertical_kd = 80.0;
  Scenario off = sc;
  off.forces.ankle_spring = false;
  const TrajectoryLog with = run_takeoff(sc);
  const TrajectoryLog without = run_takeoff(off);
  const bool pass = with.summary.took_off && without.summary.took_off &&
                    with.summary.takeoff_speed > without.summary.takeoff_speed;
  std::snprintf(buf, sizeof buf,
                "spring on %.3f m/s > off %.3f m/s (gain %.1f%%; hardware "
                "reported 25%%)",
                with.summary.takeoff_speed, without.summary.takeoff_speed,
                (with.summary.takeoff_speed / without.summary.takeoff_speed -
                 1.0) * 100.0);
  report(4, "ankle-spring effect", pass, buf);
}

void criterion_5_numerics(const TrajectoryLog& log) {
  const RobotParams p;
  std::mt19937 rng(71);
  bool pass = true;
  std::string why;

  // Jacobians against central finite differences.
  double worst_jac = 0.0;
  for (int i = 0; i < 20; ++i) {
    const GeneralizedState s = random_state(rng);
    for (ContactMode mode : {ContactMode::kFlatToe, ContactMode::kToeTip}) {
      const ConstraintKin ck = constraint_jacobian(s, p, mode);
      const MatX fd = legsim::testing::fd_jacobian(
          [&](const GeneralizedState& q) {
            return constraint_positions(q, p, mode);
          },
          s);
      worst_jac = std::max(worst_jac, (ck.J - fd).norm() / fd.norm());
    }
    const TaskValues tv = task_values(s, p);
    const MatX fd = legsim::testing::fd_jacobian(
        [&](const GeneralizedState& q) {
          const PointKin c = com_position(q, p);
          VecX v(2);
          v << c.p.x(), c.p.y();
          return v;
        },
        s);
    MatX task(2, 6);
    task.row(0) = tv.horizontal.J;
    task.row(1) = tv.vertical.J;
    worst_jac = std::max(worst_jac, (task - fd).norm() / fd.norm());
  }
  if (worst_jac >= 1e-5) {
    pass = false;
    why += "jacobian-fd ";
  }

  // Mass matrix SPD and the velocity-matrix structure property.
  double worst_skew = 0.0;
  for (int i = 0; i < 20; ++i) {
    const GeneralizedState s = random_state(rng);
    const Mat6 m = mass_matrix(s, p);
    if ((m - m.transpose()).norm() > 1e-12 ||
        Eigen::LLT<Mat6>(m).info() != Eigen::Success) {
      pass = false;
      why += "spd ";
      break;
    }
    const Mat6 c = coriolis_matrix(s, p);
    GeneralizedState plus = s, minus = s;
    plus.q += 1e-6 * s.qd;
    minus.q -= 1e-6 * s.qd;
    const Mat6 mdot = (mass_matrix(plus, p) - mass_matrix(minus, p)) / 2e-6;
    const Mat6 z = mdot - 2.0 * c;
    worst_skew = std::max(worst_skew, (z + z.transpose()).norm());
  }
  if (worst_skew >= 1e-8) {
    pass = false;
    why += "skew ";
  }

  // Passive energy drift over one integrated second at 1e-4 step.
  Scenario sc = default_scenario();
  sc.forces = passive_forces();
  sc.integration.step = 1e-4;
  sc.initial.q << 0.0, 1.5, 0.2, 2.4, 2.0, 0.3;
  sc.initial.qd << 0.4, 1.0, 0.8, -1.0, 1.5, 0.5;
  SimContext ctx = make_context(sc);
  ctx.ground_y = -1e9;
  ctx.torque_override = [](double, const GeneralizedState&, ContactMode) {
    return Vec2::Zero();
  };
  GeneralizedState state = sc.initial;
  ContactMode mode = ContactMode::kAirborne;
  double t = 0.0;
  for (int i = 0; i < 10000; ++i) step(&state, &mode, &t, sc, &ctx, nullptr);
  const double e0 = kinetic_energy(sc.initial, p) +
                    gravitational_energy(sc.initial, p);
  const double e1 = kinetic_energy(state, p) + gravitational_energy(state, p);
  const double drift = std::abs(e1 - e0) / std::abs(e0);
  if (drift >= 1e-6) {
    pass = false;
    why += "energy-drift ";
  }

  // Constraint drift and contact power over the logged stance.
  const BodyKin k0 = forward_kinematics(default_scenario().initial, p);
  double worst_drift = 0.0, worst_power = 0.0;
  for (const LogSample& sample : log.samples) {
    if (sample.mode == ContactMode::kAirborne) break;
    GeneralizedState st;
    st.q = sample.q;
    st.qd = sample.qd;
    const BodyKin k = forward_kinematics(st, p);
    worst_drift = std::max(worst_drift, (k.claw.p - k0.claw.p).norm());
    if (sample.f_c.size()) {
      const ConstraintKin ck = constraint_jacobian(st, p, sample.mode);
      worst_power = std::max(
          worst_power, std::abs(sample.qd.dot(ck.J.transpose() * sample.f_c)));
    }
  }
  if (worst_drift >= 1e-3) {
    pass = false;
    why += "constraint-drift ";
  }
  if (worst_power >= 1e-6) {
    pass = false;
    why += "contact-power ";
  }

  // Observed integrator order via step halving on a smooth stance window.
  Scenario rich = default_scenario();
  rich.forces = passive_forces();
  rich.forces.ankle_spring = true;
  rich.forces.toe_spring = true;
  rich.initial = legsim::testing::balanced_flat_posture(p, deg2rad(18.0));
  const ConstraintKin ck0 =
      constraint_jacobian(rich.initial, p, ContactMode::kFlatToe);
  MatX statics(6, 6);
  statics.leftCols(2) = actuation_selection().transpose();
  statics.rightCols(4) = ck0.J.transpose();
  const VecX sol = Eigen::CompleteOrthogonalDecomposition<MatX>(statics).solve(
      gravity_vector(rich.initial, p) -
      external_forces(rich.initial, ActuationInput{}, p, rich.forces)
          .generalized);
  const Vec2 tau0(sol[0], sol[1]);
  auto end_state = [&](double h) {
    Scenario s = rich;
    s.integration.step = h;
    SimContext c = make_context(s);
    c.anchor = constraint_positions(s.initial, p, ContactMode::kFlatToe);
    c.torque_override = [tau0](double tt, const GeneralizedState&,
                               ContactMode) {
      return Vec2(tau0[0] + 0.02 * std::sin(10.0 * tt),
                  tau0[1] + 0.02 * std::cos(8.0 * tt));
    };
    GeneralizedState st = s.initial;
    ContactMode md = ContactMode::kFlatToe;
    double tt = 0.0;
    const long n = std::lround(0.2 / h);
    for (long i = 0; i < n; ++i) step(&st, &md, &tt, s, &c, nullptr);
    Eigen::Matrix<double, 12, 1> y;
    y << st.q, st.qd;
    return y;
  };
  const auto y1 = end_state(8e-4);
  const auto y2 = end_state(4e-4);
  const auto y3 = end_state(2e-4);
  const auto y4 = end_state(1e-4);
  const double r1 = (y1 - y2).norm() / (y2 - y3).norm();
  const double r2 = (y2 - y3).norm() / (y3 - y4).norm();
  if (r1 < 8.0 || r1 > 40.0 || r2 < 8.0 || r2 > 40.0) {
    pass = false;
    why += "rk4-order ";
  }

  std::snprintf(buf, sizeof buf,
                "jac fd %.1e, skew %.1e, drift %.1e/s, anchor %.2e m, "
                "contact power %.1e W, halving ratios %.1f/%.1f%s%s",
                worst_jac, worst_skew, drift, worst_drift, worst_power, r1, r2,
                why.empty() ? "" : " FAILED: ", why.c_str());
  report(5, "numerics property suite", pass, buf);
}

void criterion_6_control() {
  const RobotParams p;
  std::mt19937 rng(72);
  bool pass = true;
  std::string why;

  // Null-space projector idempotence.
  double worst_idem = 0.0;
  for (int i = 0; i < 10; ++i) {
    MatX j(3, 6);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 6; ++c) j(r, c) = dist(rng);
    }
    const MatX n = nullspace(j, 1e-8);
    worst_idem = std::max(worst_idem, (n * n - n).norm());
  }
  if (worst_idem >= 1e-6) {
    pass = false;
    why += "idempotence ";
  }

  // Priority invariance of higher tasks under low-priority perturbation.
  double worst_leak = 0.0;
  for (int i = 0; i < 10; ++i) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto mk = [&](double b) {
      Task t;
      t.J = MatX(1, 6);
      for (int c = 0; c < 6; ++c) t.J(0, c) = dist(rng);
      t.Jdot = MatX::Zero(1, 6);
      t.b = VecX::Constant(1, b);
      return t;
    };
    const Task t1 = mk(0.9), t2 = mk(-0.4);
    Task t3 = mk(0.2);
    const Vec6 a = prioritized_accel({t1, t2, t3}, 1e-8);
    t3.b = VecX::Constant(1, 11.0);
    const Vec6 b = prioritized_accel({t1, t2, t3}, 1e-8);
    worst_leak = std::max({worst_leak, std::abs((t1.J * (a - b))(0, 0)),
                           std::abs((t2.J * (a - b))(0, 0))});
  }
  if (worst_leak >= 1e-6) {
    pass = false;
    why += "priority ";
  }

  // Extraction/forward-dynamics round trip on random stance states.
  double worst_rt = 0.0;
  ForceConfig off = passive_forces();
  for (int i = 0; i < 10; ++i) {
    const ContactMode mode =
        i % 2 ? ContactMode::kFlatToe : ContactMode::kToeTip;
    std::uniform_real_distribution<double> pos(-0.2, 0.2);
    std::uniform_real_distribution<double> hip(2.0, 2.8);
    std::uniform_real_distribution<double> ankle(1.2, 2.6);
    std::uniform_real_distribution<double> toe(0.1, 0.5);
    std::uniform_real_distribution<double> rate(-2.0, 2.0);
    GeneralizedState s;
    s.q << pos(rng), pos(rng), pos(rng), hip(rng), ankle(rng), toe(rng);
    for (int k = 0; k < 6; ++k) s.qd[k] = rate(rng);
    s = legsim::testing::project_to_manifold(s, p, mode);
    std::uniform_real_distribution<double> tq(-1.5, 1.5);
    const Vec2 tau0(tq(rng), tq(rng));
    StanceOptions opts;
    opts.baumgarte_omega = 0.0;
    const Vec6 qdd =
        constrained_accel(s, tau0, ActuationInput{}, p, mode, off, opts).qdd;
    const Vec2 tau = torque_extraction(qdd, s, p, mode, 1e-10);
    worst_rt = std::max(worst_rt, (tau - tau0).norm());
  }
  if (worst_rt >= 1e-6) {
    pass = false;
    why += "roundtrip ";
  }

  std::snprintf(buf, sizeof buf,
                "idempotence %.1e, priority leak %.1e, torque round trip "
                "%.1e%s%s",
                worst_idem, worst_leak, worst_rt,
                why.empty() ? "" : " FAILED: ", why.c_str());
  report(6, "control property suite", pass, buf);
}

void criterion_7_metrics() {
  bool pass = true;
  std::string why;
  const double fr = froude(0.23, 0.24);
  if (std::abs(fr - 0.0225) > 1e-4) {
    pass = false;
    why += "froude ";
  }
  const double eo = energy_output(0.62, 2.4, 0.4);
  if (std::abs(eo - 4.218) > 1e-3) {
    pass = false;
    why += "energy-output ";
  }
  const auto pairs = read_mass_pairs_csv(
      read_file(data_path("allometry_birds.csv")));
  const AllometryFit clean = fit_allometry(pairs);
  if (std::abs(clean.a - 0.1289) > 1e-6 || std::abs(clean.b - 1.2) > 1e-6) {
    pass = false;
    why += "fit-exact ";
  }
  auto noisy = pairs;
  std::mt19937 rng(4242);
  std::normal_distribution<double> noise(0.0, 0.02);
  for (auto& [mb, ml] : noisy) ml *= 1.0 + noise(rng);
  const AllometryFit fit = fit_allometry(noisy);
  if (std::abs(fit.a - 0.1289) > 0.05 * 0.1289 ||
      std::abs(fit.b - 1.2) > 0.02 * 1.2 || fit.r2 <= 0.98) {
    pass = false;
    why += "fit-noisy ";
  }
  std::snprintf(buf, sizeof buf,
                "froude=%.4f (0.0225), E_out=%.3f J (4.218), fit a=%.5f "
                "b=%.4f r2=%.4f%s%s",
                fr, eo, fit.a, fit.b, fit.r2,
                why.empty() ? "" : " FAILED: ", why.c_str());
  report(7, "metrics arithmetic", pass, buf);
}

void criterion_8_published_fixtures() {
  bool pass = true;
  std::string why;

  // 60.1 J electrical input at the jumping take-off instant.
  const auto jump_vi =
      read_power_csv(read_file(data_path("fixtures/jumping_vi.csv")));
  const double e_jump = energy_input(jump_vi);
  if (std::abs(e_jump - 60.1) > 1e-6) {
    pass = false;
    why += "E-in ";
  }

  // 0.17 s take-off at 2.4 m/s: average acceleration 14.1 m/s^2.
  const auto speed =
      read_speed_csv(read_file(data_path("fixtures/jumping_speed.csv")));
  const double accel = average_acceleration(speed, 0.17);
  if (std::abs(accel - 14.1) > 0.1) {
    pass = false;
    why += "accel ";
  }

  // Efficiency ratios against standing and falling take-offs.  The heights
  // complete the published energy-output figures.
  const double eta_jump = efficiency(energy_output(0.62, 2.4, 0.4), e_jump);
  const double e_stand = energy_input(
      read_power_csv(read_file(data_path("fixtures/standing_vi.csv"))));
  const double e_fall = energy_input(
      read_power_csv(read_file(data_path("fixtures/falling_vi.csv"))));
  const double eta_stand =
      efficiency(energy_output(0.62, 0.4, 0.058113120593399924), e_stand);
  const double eta_fall =
      efficiency(energy_output(0.62, 1.1, 0.07068954780719576), e_fall);
  const double r_stand = eta_jump / eta_stand;
  const double r_fall = eta_jump / eta_fall;
  if (std::abs(r_stand - 9.7) > 0.05 || std::abs(r_fall - 4.9) > 0.05) {
    pass = false;
    why += "eta-ratios ";
  }

  // Leg contribution to take-off speed: 2.2 of 2.4 m/s.
  const auto legs =
      read_speed_csv(read_file(data_path("fixtures/legsonly_speed.csv")));
  const double contribution = legs.at(0.17) / speed.at(0.17);
  if (std::abs(contribution - 0.917) > 0.005) {
    pass = false;
    why += "leg-share ";
  }

  // Gait measurements: 0.23 m/s walk, 26.6 cm hop, 37.0 cm height jump.
  const double walk = mean_forward_speed(
      read_xy_csv(read_file(data_path("fixtures/walk_track.csv"))));
  const double hop = horizontal_range(
      read_xy_csv(read_file(data_path("fixtures/hop_track.csv"))));
  const double jump = vertical_range(
      read_xy_csv(read_file(data_path("fixtures/heightjump_track.csv"))));
  if (std::abs(walk - 0.23) > 1e-6 || std::abs(hop - 0.266) > 1e-6 ||
      std::abs(jump - 0.37) > 1e-6) {
    pass = false;
    why += "gait-tracks ";
  }

  std::snprintf(buf, sizeof buf,
                "E=%.1f J, a=%.1f m/s^2, eta ratios %.2f/%.2f, legs %.1f%%, "
                "walk %.2f m/s, hop %.3f m, jump %.3f m%s%s",
                e_jump, accel, r_stand, r_fall, contribution * 100.0, walk,
                hop, jump, why.empty() ? "" : " FAILED: ", why.c_str());
  report(8, "published-figure fixtures", pass, buf);
}

void criterion_9_determinism(const TrajectoryLog& first) {
  const Scenario sc = default_scenario();
  TrajectoryLog second = run_takeoff(sc);
  if (second.find(EventKind::kTakeOff)) {
    second = run_flight(std::move(second), sc);
  }
  const bool logs_equal = trajectory_csv(first) == trajectory_csv(second) &&
                          events_csv(first) == events_csv(second);

  Scenario quick = sc;
  quick.integration.duration = 0.25;
  quick.flight_horizon = 0.05;
  SweepAxis axis{"Gear ratio", {15.0, 19.13, 25.0}};
  const auto serial = sweep(quick, {axis}, false);
  const auto parallel = sweep(quick, {axis}, true);
  bool sweeps_equal = serial.size() == parallel.size();
  for (size_t i = 0; sweeps_equal && i < serial.size(); ++i) {
    sweeps_equal = serial[i].summary.takeoff_speed ==
                       parallel[i].summary.takeoff_speed &&
                   serial[i].summary.peak_joint_speed ==
                       parallel[i].summary.peak_joint_speed &&
                   serial[i].feasible == parallel[i].feasible;
  }
  // The gear study itself: 19.13 feasible, 25 infeasible.
  const bool gear_ok =
      serial.size() == 3 && serial[0].feasible && serial[1].feasible &&
      !serial[2].feasible;

  std::snprintf(buf, sizeof buf,
                "repeat logs bit-identical: %s; serial==parallel sweep: %s; "
                "gear {15, 19.13, 25} -> {%d,%d,%d}",
                logs_equal ? "yes" : "NO", sweeps_equal ? "yes" : "NO",
                int(serial[0].feasible), int(serial[1].feasible),
                int(serial[2].feasible));
  report(9, "determinism", logs_equal && sweeps_equal && gear_ok, buf);
}

}  // namespace

int main() {
  std::printf("acceptance suite: planar take-off simulator\n");
  const auto wall0 = std::chrono::steady_clock::now();
  const Scenario sc = default_scenario();
  TrajectoryLog log = run_takeoff(sc);
  if (log.find(EventKind::kTakeOff)) log = run_flight(std::move(log), sc);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0)
          .count();

  criterion_1_takeoff_speed(log, wall);
  criterion_2_joint_speed(log);
  criterion_3_power_sizing();
  criterion_4_ankle_spring();
  criterion_5_numerics(log);
  criterion_6_control();
  criterion_7_metrics();
  criterion_8_published_fixtures();
  criterion_9_determinism(log);

  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
