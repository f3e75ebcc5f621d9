#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.h"
#include "legsim/gaits.h"
#include "legsim/kinematics.h"

using namespace legsim;

TEST_CASE("two-link inverse kinematics") {
  const RobotParams p;

  SUBCASE("straight-down target at the extension limit") {
    const Vec2 target(0.0, -(p.l1 + p.l2 - 1e-6));
    const JointAngles ja = ik_leg(target, p);
    // Nearly straight leg: the interior ankle angle approaches pi, i.e. the
    // segment-to-segment turn returned as q5 goes to zero.
    CHECK(std::abs(ja.ankle) < 0.01);
    CHECK(kPi - ja.ankle == doctest::Approx(kPi).epsilon(0.01));
    CHECK((fk_leg(ja, p) - target).norm() < 1e-9);
  }

  SUBCASE("round trip on random reachable targets") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> radius(std::abs(p.l1 - p.l2) + 2e-6,
                                                  p.l1 + p.l2 - 2e-6);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
      const double r = radius(rng);
      const double a = angle(rng);
      const Vec2 target(r * std::cos(a), r * std::sin(a));
      const JointAngles ja = ik_leg(target, p);
      CHECK((fk_leg(ja, p) - target).norm() < 1e-9);
      CHECK(ja.ankle >= 0.0);  // backward-bend branch
    }
  }

  SUBCASE("table posture is reproduced") {
    const JointAngles crouch{deg2rad(135.0), deg2rad(145.0)};
    const Vec2 foot = fk_leg(crouch, p);
    const JointAngles ja = ik_leg(foot, p);
    CHECK(ja.ankle == doctest::Approx(deg2rad(145.0)).epsilon(1e-10));
    CHECK(std::remainder(ja.hip - deg2rad(135.0), 2.0 * kPi) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  }

  SUBCASE("mirrored target with the mirrored branch") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coord(-0.15, 0.15);
    for (int i = 0; i < 50; ++i) {
      Vec2 t(coord(rng), -std::abs(coord(rng)) - 0.05);
      if (t.norm() > p.l1 + p.l2 - 1e-5) continue;
      const JointAngles a = ik_leg(t, p, /*bend_backward=*/true);
      const JointAngles b =
          ik_leg(Vec2(-t.x(), t.y()), p, /*bend_backward=*/false);
      CHECK(b.ankle == doctest::Approx(-a.ankle).epsilon(1e-9));
      CHECK(std::remainder(b.hip - (kPi - a.hip), 2.0 * kPi) ==
            doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    }
  }

  SUBCASE("unreachable targets name the nearest point") {
    CHECK_THROWS_WITH_AS(ik_leg(Vec2(0.5, -0.5), p),
                         doctest::Contains("nearest reachable"), ConfigError);
    RobotParams uneven;
    uneven.l2 = 0.10;
    CHECK_THROWS_AS(ik_leg(Vec2(1e-9, 1e-9), uneven), ConfigError);
  }
}

TEST_CASE("foot trajectory generation") {
  const RobotParams p;
  const GaitConfig cfg;

  SUBCASE("walk path is a closed loop") {
    const FootTrajectory walk = gen_trajectory(GaitMode::kWalk, cfg, p);
    REQUIRE(walk.phases.size() == 2);
    CHECK(walk.phases[0].name == "stance");
    CHECK(walk.phases[1].name == "swing");
    const Vec2 start = walk.sample(0.0);
    const Vec2 end = walk.sample(walk.total_duration());
    CHECK((start - end).norm() < 1e-9);
    CHECK((walk.phases[0].waypoints.back() - walk.phases[1].waypoints.front())
              .norm() < 1e-12);
  }

  SUBCASE("push-off directions propel the body the right way") {
    const FootTrajectory jump = gen_trajectory(GaitMode::kJumpTakeoff, cfg, p);
    CHECK(push_direction(jump, "push-off").y() > 0.0);
    const FootTrajectory hop = gen_trajectory(GaitMode::kForwardHop, cfg, p);
    const Vec2 d = push_direction(hop, "push-off");
    CHECK(d.x() > 0.0);
    CHECK(d.y() > 0.0);
  }

  SUBCASE("all four default gaits stay reachable") {
    for (GaitMode mode : {GaitMode::kJumpTakeoff, GaitMode::kWalk,
                          GaitMode::kHeightJump, GaitMode::kForwardHop}) {
      const FootTrajectory traj = gen_trajectory(mode, cfg, p);
      const double T = traj.total_duration();
      for (int i = 0; i <= 500; ++i) {
        const Vec2 pt = traj.sample(T * i / 500.0);
        CHECK_NOTHROW(ik_leg(pt, p));
        CHECK(pt.norm() <= p.l1 + p.l2 - 1e-6);
      }
    }
  }

  SUBCASE("walk swing clears the ground line") {
    const FootTrajectory walk = gen_trajectory(GaitMode::kWalk, cfg, p);
    const double stance_T = walk.phases[0].duration;
    const double T = walk.total_duration();
    for (int i = 0; i <= 400; ++i) {
      const double t = stance_T + (T - stance_T) * i / 400.0;
      CHECK(walk.sample(t).y() >= -cfg.stand_height - 1e-12);
    }
  }

  SUBCASE("forward hop has the five named phases") {
    const FootTrajectory hop = gen_trajectory(GaitMode::kForwardHop, cfg, p);
    REQUIRE(hop.phases.size() == 5);
    CHECK(hop.phases[0].name == "crouch");
    CHECK(hop.phases[1].name == "push-off");
    CHECK(hop.phases[2].name == "retract");
    CHECK(hop.phases[3].name == "stretch");
    CHECK(hop.phases[4].name == "balance");
    // The balance phase settles the body toward the ground: the foot rises
    // in the hip frame, so the propelling direction points down.
    CHECK(push_direction(hop, "balance").y() < 0.0);
  }
}

TEST_CASE("reference discretization") {
  SUBCASE("single step equals the mean velocity") {
    JointReference ref;
    for (int i = 0; i <= 100; ++i) {
      const double t = i * 0.01;
      ref.t.push_back(t);
      ref.hip_pos.push_back(std::sin(2.0 * t));
      ref.ankle_pos.push_back(0.5 * t * t);
      ref.hip_vel.push_back(2.0 * std::cos(2.0 * t));
      ref.ankle_vel.push_back(t);
    }
    const JointReference d = discretize_reference(ref, 1, 0.0);
    const double mean_hip = (ref.hip_pos.back() - ref.hip_pos.front()) / 1.0;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d.hip_vel[i] == doctest::Approx(mean_hip).epsilon(1e-12));
    }
    CHECK(d.hip_pos.back() - d.hip_pos.front() ==
          doctest::Approx(ref.hip_pos.back() - ref.hip_pos.front())
              .epsilon(1e-12));
  }

  SUBCASE("displacement preserved for random profiles") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> amp(-2.0, 2.0);
    for (int n_steps : {2, 5, 10}) {
      JointReference ref;
      const double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
      for (int i = 0; i <= 200; ++i) {
        const double t = i * 0.005;
        ref.t.push_back(t);
        ref.hip_pos.push_back(a1 * std::sin(3.0 * t) + a2 * t);
        ref.ankle_pos.push_back(a3 * std::cos(5.0 * t));
        ref.hip_vel.push_back(0.0);
        ref.ankle_vel.push_back(0.0);
      }
      const JointReference d = discretize_reference(ref, n_steps, 0.0);
      CHECK(std::abs((d.hip_pos.back() - d.hip_pos.front()) -
                     (ref.hip_pos.back() - ref.hip_pos.front())) < 1e-9);
      CHECK(std::abs((d.ankle_pos.back() - d.ankle_pos.front()) -
                     (ref.ankle_pos.back() - ref.ankle_pos.front())) < 1e-9);
      // Velocities take at most n_steps distinct values (plus zero fill).
      std::vector<double> distinct;
      for (double v : d.hip_vel) {
        bool found = false;
        for (double u : distinct) {
          if (std::abs(u - v) < 1e-12) found = true;
        }
        if (!found) distinct.push_back(v);
      }
      CHECK(static_cast<int>(distinct.size()) <= n_steps + 1);
    }
  }

  SUBCASE("hip delay shifts the hip channel with zero fill") {
    JointReference ref;
    for (int i = 0; i <= 100; ++i) {
      const double t = i * 0.002;
      ref.t.push_back(t);
      ref.hip_pos.push_back(t * 1.5);
      ref.ankle_pos.push_back(-t);
      ref.hip_vel.push_back(1.5);
      ref.ankle_vel.push_back(-1.0);
    }
    const JointReference d = discretize_reference(ref, 4, 0.05);
    CHECK(d.t.back() == doctest::Approx(0.25).epsilon(1e-9));
    for (size_t i = 0; i < d.size(); ++i) {
      if (d.t[i] < 0.05 - 1e-12) {
        CHECK(d.hip_vel[i] == 0.0);
        CHECK(d.hip_pos[i] == ref.hip_pos.front());
      }
    }
    CHECK(d.hip_pos.back() ==
          doctest::Approx(ref.hip_pos.back()).epsilon(1e-9));

    const JointReference no_delay = discretize_reference(ref, 4, 0.0);
    CHECK(no_delay.t.back() == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(no_delay.hip_pos.back() ==
          doctest::Approx(ref.hip_pos.back()).epsilon(1e-9));
  }

  SUBCASE("bad arguments") {
    JointReference ref;
    ref.t = {0.0, 0.1};
    ref.hip_pos = {0.0, 1.0};
    ref.ankle_pos = {0.0, 1.0};
    ref.hip_vel = {0.0, 0.0};
    ref.ankle_vel = {0.0, 0.0};
    CHECK_THROWS_AS(discretize_reference(ref, 0, 0.0), ConfigError);
    CHECK_THROWS_AS(discretize_reference(ref, 2, -0.1), ConfigError);
  }
}

TEST_CASE("gait to joint commands") {
  const RobotParams p;

  SUBCASE("constant foot position gives zero velocity references") {
    FootTrajectory traj;
    traj.phases = {GaitPhase{"hold", 0.5, {Vec2(-0.05, -0.15)}}};
    GaitConfig cfg;
    const JointReference ref = gait_to_joint_commands(traj, p, cfg);
    for (size_t i = 0; i < ref.size(); ++i) {
      CHECK(std::abs(ref.hip_vel[i]) < 1e-12);
      CHECK(std::abs(ref.ankle_vel[i]) < 1e-12);
    }
  }

  SUBCASE("default walk matches the published forward speed") {
    GaitConfig cfg;
    const FootTrajectory walk = gen_trajectory(GaitMode::kWalk, cfg, p);
    // Mean stance-phase foot speed relative to the body equals the body
    // speed under no slip.
    const double stance_T = walk.phases[0].duration;
    const Vec2 d = walk.sample(stance_T) - walk.sample(0.0);
    const double mean_speed = d.norm() / stance_T;
    CHECK(mean_speed == doctest::Approx(0.23).epsilon(0.01));
  }

  SUBCASE("joint rates stay within the geared motor budget") {
    GaitConfig cfg;
    const double limit = p.motor_max_speed / p.gear_ratio;
    for (GaitMode mode : {GaitMode::kJumpTakeoff, GaitMode::kWalk,
                          GaitMode::kHeightJump, GaitMode::kForwardHop}) {
      const FootTrajectory traj = gen_trajectory(mode, cfg, p);
      const JointReference ref = gait_to_joint_commands(traj, p, cfg);
      for (size_t i = 0; i < ref.size(); ++i) {
        CHECK(std::abs(ref.hip_vel[i]) < limit);
        CHECK(std::abs(ref.ankle_vel[i]) < limit);
      }
    }
  }

  SUBCASE("ankle bend branch stays consistent along every gait") {
    GaitConfig cfg;
    for (GaitMode mode : {GaitMode::kJumpTakeoff, GaitMode::kWalk,
                          GaitMode::kHeightJump, GaitMode::kForwardHop}) {
      const FootTrajectory traj = gen_trajectory(mode, cfg, p);
      const JointReference ref = gait_to_joint_commands(traj, p, cfg);
      for (size_t i = 0; i < ref.size(); ++i) {
        CHECK(ref.ankle_pos[i] >= -1e-12);
      }
    }
  }

  SUBCASE("discretization plugs into the command pipeline") {
    GaitConfig cfg;
    cfg.n_steps = 8;
    cfg.hip_delay = 0.02;
    const FootTrajectory walk = gen_trajectory(GaitMode::kWalk, cfg, p);
    const JointReference ref = gait_to_joint_commands(walk, p, cfg);
    CHECK(ref.n_steps == 8);
    CHECK(ref.hip_delay == 0.02);
    CHECK(ref.t.back() ==
          doctest::Approx(walk.total_duration() + 0.02).epsilon(1e-6));
  }
}

TEST_CASE("static stability of the flat stance") {
  const RobotParams p;
  const GeneralizedState crouch = [] {
    GeneralizedState q;
    q.q << 0.0, 0.0, deg2rad(10.0), deg2rad(135.0), deg2rad(145.0),
        deg2rad(25.0);
    return q;
  }();

  SUBCASE("table posture stands on its toes by design") {
    const SupportPolygon sp = static_stability(crouch, p);
    CHECK(sp.verdict == StabilityVerdict::kStableToeSupport);
    CHECK(sp.com_x > sp.toe_joint_x);
    CHECK(sp.com_x < sp.toe_tip_x);
  }

  SUBCASE("mass center beyond the footprint tips over") {
    RobotParams heavy = p;
    heavy.body_com_offset = Vec2(0.4, 0.0);
    CHECK(static_stability(crouch, heavy).verdict ==
          StabilityVerdict::kUnstableNoseDown);
    heavy.body_com_offset = Vec2(-0.4, 0.0);
    CHECK(static_stability(crouch, heavy).verdict ==
          StabilityVerdict::kUnstableNoseUp);
  }

  SUBCASE("locked toe joint removes the re-orientation verdict") {
    const SupportPolygon sp =
        static_stability(crouch, p, /*toe_joint_locked=*/true);
    CHECK(sp.verdict == StabilityVerdict::kStablePalmSupport);
    CHECK(sp.toe_joint_locked);
  }

  SUBCASE("feet not flat is rejected") {
    GeneralizedState s = crouch;
    s.q[5] = deg2rad(10.0);
    CHECK_THROWS_WITH_AS(static_stability(s, p), "feet not flat on ground",
                         ConfigError);
  }

  SUBCASE("agrees with the tipping-moment sign oracle") {
    std::mt19937 rng(44);
    std::uniform_real_distribution<double> pitch(-0.4, 0.6);
    std::uniform_real_distribution<double> hip(1.9, 2.9);
    std::uniform_real_distribution<double> ankle(1.0, 2.8);
    std::uniform_real_distribution<double> offset(-0.25, 0.25);
    int tested = 0;
    for (int i = 0; i < 5000 && tested < 500; ++i) {
      GeneralizedState s;
      const double q3 = pitch(rng), q4 = hip(rng), q5 = ankle(rng);
      // Deflection that lays the toe flat on the ground.
      double q6 =
          -std::remainder(q3 + q4 + q5 + RobotParams{}.theta3, 2.0 * kPi);
      if (q6 < 0.0) q6 += 2.0 * kPi;
      if (q6 > kPi) continue;  // keep a physically meaningful deflection
      s.q << 0.0, 0.0, q3, q4, q5, q6;
      RobotParams rp = p;
      rp.body_com_offset = Vec2(offset(rng), 0.0);
      SupportPolygon sp;
      try {
        sp = static_stability(s, rp);
      } catch (const ConfigError&) {
        continue;
      }
      ++tested;
      // Brute force: the gravity moment about each footprint edge must turn
      // the body back inside.
      const double mg = rp.total_mass() * kGravity;
      const double m_front = mg * (sp.toe_tip_x - sp.com_x);
      const double m_back = mg * (sp.com_x - sp.back_claw_x);
      const bool stable = m_front >= 0.0 && m_back >= 0.0;
      const bool verdict_stable =
          sp.verdict == StabilityVerdict::kStableToeSupport ||
          sp.verdict == StabilityVerdict::kStablePalmSupport;
      CHECK(stable == verdict_stable);
      if (!stable) {
        CHECK(sp.verdict == (m_front < 0.0
                                 ? StabilityVerdict::kUnstableNoseDown
                                 : StabilityVerdict::kUnstableNoseUp));
      } else {
        CHECK(sp.verdict == (sp.com_x >= sp.toe_joint_x
                                 ? StabilityVerdict::kStableToeSupport
                                 : StabilityVerdict::kStablePalmSupport));
      }
    }
    CHECK(tested == 500);
  }
}
