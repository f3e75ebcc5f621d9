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

#include "legsim/metrics.h"

#include <algorithm>
#include <cmath>

namespace legsim {

double takeoff_power(double m_b, double v_takeoff) {
  if (!(m_b > 0.0)) throw ConfigError("mass must be positive");
  if (v_takeoff < 0.0) throw ConfigError("speed must be non-negative");
  return m_b * kGravity * v_takeoff;
}

double interpolate_takeoff_speed(double m_b) {
  if (!(m_b > 0.0)) throw ConfigError("mass must be positive");
  constexpr double m0 = 0.491, v0 = 1.85;
  constexpr double m1 = 0.783, v1 = 3.21;
  return v0 + (v1 - v0) * (m_b - m0) / (m1 - m0);
}

double energy_input(const std::vector<PowerSample>& series) {
  if (series.size() < 2) throw ConfigError("power series needs >= 2 samples");
  double e = 0.0;
  for (size_t i = 1; i < series.size(); ++i) {
    const double dt = series[i].t - series[i - 1].t;
    if (!(dt > 0.0)) throw ConfigError("power series timestamps not increasing");
    e += 0.5 * (series[i].watts + series[i - 1].watts) * dt;
  }
  return e;
}

double energy_output(double m_b, double v, double h) {
  if (!(m_b > 0.0)) throw ConfigError("mass must be positive");
  return 0.5 * m_b * v * v + m_b * kGravity * h;
}

double efficiency(double e_out, double e_in) {
  if (!(e_in > 0.0)) throw ConfigError("input energy must be positive");
  return e_out / e_in;
}

double SpeedSeries::at(double time) const {
  if (t.empty()) throw ConfigError("empty speed series");
  if (time <= t.front()) return v.front();
  if (time >= t.back()) return v.back();
  const auto it = std::upper_bound(t.begin(), t.end(), time);
  const size_t i = static_cast<size_t>(it - t.begin()) - 1;
  const double dt = t[i + 1] - t[i];
  const double a = dt > 0 ? (time - t[i]) / dt : 0.0;
  return (1.0 - a) * v[i] + a * v[i + 1];
}

double average_acceleration(const SpeedSeries& series, double takeoff_time) {
  if (!(takeoff_time > 0.0)) throw ConfigError("takeoff time must be positive");
  if (series.t.empty() || series.t.front() > 0.0 ||
      series.t.back() + 1e-9 < takeoff_time) {
    throw ConfigError("speed series does not cover [0, takeoff_time]");
  }
  return (series.at(takeoff_time) - series.at(0.0)) / takeoff_time;
}

double froude(double v_forward, double leg_length) {
  if (!(leg_length > 0.0)) throw ConfigError("leg length must be positive");
  return v_forward * v_forward / (kGravity * leg_length);
}

double cost_of_transport(double e_elec, double m_b, double d) {
  if (!(d > 0.0)) throw ConfigError("distance must be positive");
  if (!(m_b > 0.0)) throw ConfigError("mass must be positive");
  return e_elec / (m_b * kGravity * d);
}

AllometryFit fit_allometry(const std::vector<std::pair<double, double>>& pairs,
                           int max_iter) {
  if (pairs.size() < 2) throw ConfigError("allometry fit needs >= 2 pairs");
  for (const auto& [mb, ml] : pairs) {
    if (!(mb > 0.0) || !(ml > 0.0)) {
      throw ConfigError("allometry masses must be positive");
    }
  }

  // Log-log linear least squares initializer.
  const size_t n = pairs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [mb, ml] : pairs) {
    const double x = std::log(mb), y = std::log(ml);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  double b = denom != 0.0 ? (n * sxy - sx * sy) / denom : 1.0;
  double a = std::exp((sy - b * sx) / n);

  auto ssr = [&](double aa, double bb) {
    double s = 0.0;
    for (const auto& [mb, ml] : pairs) {
      const double r = aa * std::pow(mb, bb) - ml;
      s += r * r;
    }
    return s;
  };

  // Gauss-Newton on the linear-space residuals, with step halving.
  double cost = ssr(a, b);
  bool converged = false;
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::Matrix2d jtj = Eigen::Matrix2d::Zero();
    Eigen::Vector2d jtr = Eigen::Vector2d::Zero();
    for (const auto& [mb, ml] : pairs) {
      const double p = std::pow(mb, b);
      const double r = a * p - ml;
      Eigen::Vector2d j(p, a * p * std::log(mb));
      jtj += j * j.transpose();
      jtr += j * r;
    }
    Eigen::Vector2d delta =
        jtj.fullPivLu().isInvertible()
            ? Eigen::Vector2d(jtj.fullPivLu().solve(jtr))
            : Eigen::Vector2d::Zero();
    double scale = 1.0;
    double next = cost;
    double na = a, nb = b;
    for (int half = 0; half < 30; ++half) {
      na = a - scale * delta[0];
      nb = b - scale * delta[1];
      next = na > 0.0 ? ssr(na, nb) : cost + 1.0;
      if (next <= cost) break;
      scale *= 0.5;
    }
    const double improvement = cost - next;
    a = na;
    b = nb;
    cost = next;
    if (delta.norm() < 1e-14 || improvement < 1e-30) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericsError("allometry fit did not converge");

  double mean = 0.0;
  for (const auto& [mb, ml] : pairs) mean += ml;
  mean /= static_cast<double>(n);
  double ss_tot = 0.0;
  for (const auto& [mb, ml] : pairs) ss_tot += (ml - mean) * (ml - mean);
  AllometryFit fit;
  fit.a = a;
  fit.b = b;
  fit.r2 = ss_tot > 0.0 ? 1.0 - cost / ss_tot : 1.0;
  return fit;
}

double gear_ratio_bound(double motor_max_speed, double required_joint_speed) {
  if (!(motor_max_speed > 0.0) || !(required_joint_speed > 0.0)) {
    throw ConfigError("speeds must be positive");
  }
  return motor_max_speed / required_joint_speed;
}

double mean_forward_speed(const XySeries& series) {
  if (series.t.size() < 2) throw ConfigError("trajectory needs >= 2 samples");
  const double span = series.t.back() - series.t.front();
  if (!(span > 0.0)) throw ConfigError("trajectory timestamps not increasing");
  return (series.x.back() - series.x.front()) / span;
}

double horizontal_range(const XySeries& series) {
  if (series.x.empty()) throw ConfigError("empty trajectory");
  const double x0 = series.x.front();
  double r = 0.0;
  for (double x : series.x) r = std::max(r, x - x0);
  return r;
}

double vertical_range(const XySeries& series) {
  if (series.y.empty()) throw ConfigError("empty trajectory");
  const double y0 = series.y.front();
  double r = 0.0;
  for (double y : series.y) r = std::max(r, y - y0);
  return r;
}

}  // namespace legsim
