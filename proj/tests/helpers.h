// Shared test utilities: seeded random states and finite-difference probes.

#ifndef LEGSIM_TESTS_HELPERS_H_
#define LEGSIM_TESTS_HELPERS_H_

#include <functional>
#include <random>

#include "legsim/kinematics.h"
#include "legsim/types.h"

namespace legsim::testing {

inline GeneralizedState random_state(std::mt19937& rng,
                                     bool with_rates = true) {
  std::uniform_real_distribution<double> pos(-0.5, 0.5);
  std::uniform_real_distribution<double> hip(1.6, 3.0);
  std::uniform_real_distribution<double> ankle(0.6, 2.8);
  std::uniform_real_distribution<double> toe(0.0, 0.8);
  std::uniform_real_distribution<double> rate(-4.0, 4.0);
  GeneralizedState s;
  s.q << pos(rng), pos(rng), pos(rng), hip(rng), ankle(rng), toe(rng);
  if (with_rates) {
    for (int i = 0; i < 6; ++i) s.qd[i] = rate(rng);
  }
  return s;
}

// Central finite difference of a vector function of q.
inline VecX fd_jacobian_col(
    const std::function<VecX(const GeneralizedState&)>& f,
    const GeneralizedState& s, int coord, double h = 1e-6) {
  GeneralizedState plus = s, minus = s;
  plus.q[coord] += h;
  minus.q[coord] -= h;
  return (f(plus) - f(minus)) / (2.0 * h);
}

inline MatX fd_jacobian(const std::function<VecX(const GeneralizedState&)>& f,
                        const GeneralizedState& s, double h = 1e-6) {
  const VecX f0 = f(s);
  MatX j(f0.size(), 6);
  for (int c = 0; c < 6; ++c) j.col(c) = fd_jacobian_col(f, s, c, h);
  return j;
}

// Projects the rates onto the constraint manifold (J_c qd = 0).  Pinning
// both ends of the rigid toe segment admits no toe-segment angular rate, so
// arbitrary rates are inconsistent with FlatToe contact.
inline GeneralizedState project_to_manifold(const GeneralizedState& s,
                                            const RobotParams& p,
                                            ContactMode mode) {
  const ConstraintKin ck = constraint_jacobian(s, p, mode);
  Eigen::CompleteOrthogonalDecomposition<MatX> cod(ck.J);
  GeneralizedState out = s;
  out.qd = s.qd - cod.pseudoInverse() * (ck.J * s.qd);
  return out;
}

// Flat-footed crouch whose above-toe-joint mass center sits exactly over
// the passive toe joint, so gravity exerts no moment on the unactuated
// direction.  Solved by secant iteration on the hip angle.
inline GeneralizedState balanced_flat_posture(const RobotParams& p,
                                              double toe_deflection) {
  auto posture = [&](double hip) {
    GeneralizedState s;
    s.q << 0.0, 0.0, deg2rad(10.0), hip, deg2rad(145.0), toe_deflection;
    return s;
  };
  auto imbalance = [&](double hip) {
    const GeneralizedState s = posture(hip);
    const BodyKin k = forward_kinematics(s, p);
    const double m_above = p.total_mass() - p.m_toe;
    const Vec2 com_above =
        (p.total_mass() * com_position(s, p).p - p.m_toe * k.toe_com.p) /
        m_above;
    return com_above.x() - k.toe_joint.p.x();
  };
  double a = deg2rad(120.0), b = deg2rad(150.0);
  double fa = imbalance(a);
  for (int i = 0; i < 80; ++i) {
    const double fb = imbalance(b);
    const double c = b - fb * (b - a) / (fb - fa);
    a = b;
    fa = fb;
    b = c;
    if (std::abs(imbalance(b)) < 1e-14) break;
  }
  return posture(b);
}

}  // namespace legsim::testing

#endif  // LEGSIM_TESTS_HELPERS_H_
