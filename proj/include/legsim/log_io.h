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

#ifndef LEGSIM_LOG_IO_H_
#define LEGSIM_LOG_IO_H_

#include <string>
#include <utility>
#include <vector>

#include "legsim/gaits.h"
#include "legsim/metrics.h"
#include "legsim/sim.h"

namespace legsim {

inline constexpr const char* kTrajectoryHeader =
    "t,q1,q2,q3,q4,q5,q6,qd1,qd2,qd3,qd4,qd5,qd6,tau_hip,tau_ankle,"
    "fc_x,fc_y,mode,com_x,com_y,vcom_x,vcom_y,P_mech,E_mech";
inline constexpr const char* kEventsHeader = "t,kind";
inline constexpr const char* kJointReferenceHeader =
    "t,q4_ref,q5_ref,qd4_ref,qd5_ref";
inline constexpr const char* kPowerHeader = "t,V,I";
inline constexpr const char* kSpeedHeader = "t,speed";
inline constexpr const char* kXyHeader = "t,x,y";
inline constexpr const char* kMassPairsHeader = "body_mass_kg,leg_mass_kg";

// Shortest round-trippable decimal representation.
std::string format_double(double v);

std::string trajectory_csv(const TrajectoryLog& log);
std::string events_csv(const TrajectoryLog& log);
std::string joint_reference_csv(const JointReference& ref);

std::vector<LogSample> read_trajectory_csv(const std::string& text);
std::vector<std::pair<double, EventKind>> read_events_csv(
    const std::string& text);
JointReference read_joint_reference_csv(const std::string& text);
std::vector<PowerSample> read_power_csv(const std::string& text);
SpeedSeries read_speed_csv(const std::string& text);
XySeries read_xy_csv(const std::string& text);
std::vector<std::pair<double, double>> read_mass_pairs_csv(
    const std::string& text);

enum class CsvKind {
  kTrajectory,
  kEvents,
  kJointReference,
  kPower,
  kSpeed,
  kXy,
  kMassPairs,
  kUnknown,
};

// Dispatch on the header line.
CsvKind sniff_csv(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace legsim

#endif  // LEGSIM_LOG_IO_H_
