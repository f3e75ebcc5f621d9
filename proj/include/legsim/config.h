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

#ifndef LEGSIM_CONFIG_H_
#define LEGSIM_CONFIG_H_

#include <string>
#include <vector>

#include "legsim/gaits.h"
#include "legsim/sim.h"
#include "legsim/types.h"

namespace legsim {

// Physical dimension of a config value; selects the accepted unit tokens.
enum class Dimension {
  kNone,
  kLength,
  kMass,
  kAngle,
  kArea,
  kDensity,
  kSpring,
  kForce,
  kTime,
  kSpeed,
  kAngularSpeed,
  kTorque,
  kFrequency,
  kPower,
};

// Parses "<number> [unit]" into SI (angles to rad, spring N*mm/deg to
// N*m/rad, thrust kgf to N, ...).  Throws ConfigError naming the key on a
// malformed or mismatched unit.
double parse_quantity(const std::string& text, Dimension dim,
                      const std::string& key);

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct ConfigSection {
  std::string name;
  std::vector<ConfigEntry> entries;

  const ConfigEntry* find(const std::string& key) const;
};

// INI-style file: [section] headers, key = value lines, '#' comments.
struct ConfigFile {
  std::string path;
  std::vector<ConfigSection> sections;

  const ConfigSection* section(const std::string& name) const;
  static ConfigFile parse(const std::string& text, const std::string& path);
  static ConfigFile load(const std::string& path);
};

struct LoadedConfig {
  Scenario scenario;
  GaitConfig gait;
  std::vector<SweepAxis> sweep_axes;
  bool sweep_parallel = true;
};

// Full scenario/gait/sweep configuration.  Unknown keys and sections error
// with file:line anchors.
LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(const std::string& text,
                          const std::string& path = "<inline>");

// Parameter-table-only loader (keys may live in [params] or at top level).
RobotParams load_params(const std::string& path);

// Default scenario file contents matching default_scenario(); used by the
// CLI to bundle a runnable example.
std::string default_config_text();

}  // namespace legsim

#endif  // LEGSIM_CONFIG_H_
