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

#ifndef LEGSIM_METRICS_H_
#define LEGSIM_METRICS_H_

#include <utility>
#include <vector>

#include "legsim/types.h"

namespace legsim {

// One power reading; either electrical V*I or the mechanical sum over joints.
struct PowerSample {
  double t = 0.0;      // s
  double watts = 0.0;  // W
};

inline PowerSample electrical_power(double t, double volts, double amps) {
  return {t, volts * amps};
}

// Mechanical power required at take-off for a platform of mass m_b jumping
// at speed v: P = m g v.
double takeoff_power(double m_b, double v_takeoff);

// Linear interpolation of the take-off speed across the two reference bird
// data points (0.491 kg, 1.85 m/s) and (0.783 kg, 3.21 m/s).
double interpolate_takeoff_speed(double m_b);

// Design target the platform sizing uses (the interpolated 0.6 kg value,
// rounded up).
inline constexpr double kDesignTakeoffSpeed = 2.5;  // m/s

// Trapezoidal integral of a power series; timestamps must strictly increase.
double energy_input(const std::vector<PowerSample>& series);

// Mechanical energy at speed v and altitude h: 1/2 m v^2 + m g h.
double energy_output(double m_b, double v, double h);

// eta = E_out / E_in; requires E_in > 0.
double efficiency(double e_out, double e_in);

// Time series of scalar speed.
struct SpeedSeries {
  std::vector<double> t;
  std::vector<double> v;

  double at(double time) const;  // linear interpolation, clamped
};

// Mean derivative of speed over [0, takeoff_time].
double average_acceleration(const SpeedSeries& series, double takeoff_time);

// FR = v^2 / (g l), l the hip height over ground.
double froude(double v_forward, double leg_length);

// CoT = E_elec / (m g d).
double cost_of_transport(double e_elec, double m_b, double d);

struct AllometryFit {
  double a = 0.0;
  double b = 0.0;
  double r2 = 0.0;
};

// Nonlinear least squares of m_l = a * m_b^b (log-log initializer, then
// Gauss-Newton on linear-space residuals); r^2 in linear space.
AllometryFit fit_allometry(const std::vector<std::pair<double, double>>& pairs,
                           int max_iter = 100);

// Largest gear reduction ratio the motor supports for a required joint speed.
double gear_ratio_bound(double motor_max_speed, double required_joint_speed);

// Planar position track (motion-capture style).
struct XySeries {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> y;
};

// Net horizontal displacement rate over the full series.
double mean_forward_speed(const XySeries& series);

// Largest horizontal / vertical excursion from the start point.
double horizontal_range(const XySeries& series);
double vertical_range(const XySeries& series);

}  // namespace legsim

#endif  // LEGSIM_METRICS_H_
