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

#include "legsim/config.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace legsim {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct UnitDef {
  const char* token;
  double scale;
};

// Accepted unit tokens per dimension, converting to SI on read.
const std::vector<UnitDef>& units_for(Dimension dim) {
  static const std::vector<UnitDef> none = {{"", 1.0}};
  static const std::vector<UnitDef> length = {
      {"", 1.0}, {"m", 1.0}, {"cm", 0.01}, {"mm", 0.001}};
  static const std::vector<UnitDef> mass = {{"", 1.0}, {"kg", 1.0}, {"g", 1e-3}};
  static const std::vector<UnitDef> angle = {
      {"", 1.0}, {"rad", 1.0}, {"deg", kPi / 180.0}};
  static const std::vector<UnitDef> area = {
      {"", 1.0}, {"m^2", 1.0}, {"m2", 1.0}};
  static const std::vector<UnitDef> density = {
      {"", 1.0}, {"kg/m^3", 1.0}, {"kg/m3", 1.0}};
  static const std::vector<UnitDef> spring = {
      {"", 1.0},
      {"Nm/rad", 1.0},
      {"N*m/rad", 1.0},
      {"Nmm/deg", 1e-3 * 180.0 / kPi},
      {"N*mm/deg", 1e-3 * 180.0 / kPi}};
  static const std::vector<UnitDef> force = {
      {"", 1.0}, {"N", 1.0}, {"kgf", kGravity}, {"kg", kGravity}};
  static const std::vector<UnitDef> time = {
      {"", 1.0}, {"s", 1.0}, {"ms", 1e-3}};
  static const std::vector<UnitDef> speed = {{"", 1.0}, {"m/s", 1.0}};
  static const std::vector<UnitDef> angspeed = {
      {"", 1.0}, {"rad/s", 1.0}, {"deg/s", kPi / 180.0}};
  static const std::vector<UnitDef> torque = {
      {"", 1.0}, {"Nm", 1.0}, {"N*m", 1.0}};
  static const std::vector<UnitDef> freq = {{"", 1.0}, {"Hz", 1.0}};
  static const std::vector<UnitDef> power = {{"", 1.0}, {"W", 1.0}};
  switch (dim) {
    case Dimension::kNone:
      return none;
    case Dimension::kLength:
      return length;
    case Dimension::kMass:
      return mass;
    case Dimension::kAngle:
      return angle;
    case Dimension::kArea:
      return area;
    case Dimension::kDensity:
      return density;
    case Dimension::kSpring:
      return spring;
    case Dimension::kForce:
      return force;
    case Dimension::kTime:
      return time;
    case Dimension::kSpeed:
      return speed;
    case Dimension::kAngularSpeed:
      return angspeed;
    case Dimension::kTorque:
      return torque;
    case Dimension::kFrequency:
      return freq;
    case Dimension::kPower:
      return power;
  }
  return none;
}

}  // namespace

double parse_quantity(const std::string& text, Dimension dim,
                      const std::string& key) {
  const std::string t = trim(text);
  size_t consumed = 0;
  double number = 0.0;
  try {
    number = std::stod(t, &consumed);
  } catch (const std::exception&) {
    throw ConfigError("malformed numeric value '" + t + "' for key '" + key +
                      "'");
  }
  const std::string unit = trim(t.substr(consumed));
  for (const UnitDef& u : units_for(dim)) {
    if (unit == u.token) return number * u.scale;
  }
  throw ConfigError("malformed unit '" + unit + "' for key '" + key + "'");
}

const ConfigEntry* ConfigSection::find(const std::string& key) const {
  for (const ConfigEntry& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

const ConfigSection* ConfigFile::section(const std::string& name) const {
  for (const ConfigSection& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

ConfigFile ConfigFile::parse(const std::string& text, const std::string& path) {
  ConfigFile cf;
  cf.path = path;
  cf.sections.push_back({"", {}});
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(path + ":" + std::to_string(lineno) +
                          ": unterminated section header");
      }
      cf.sections.push_back({trim(line.substr(1, line.size() - 2)), {}});
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    ConfigEntry entry;
    entry.key = trim(line.substr(0, eq));
    entry.value = trim(line.substr(eq + 1));
    entry.line = lineno;
    cf.sections.back().entries.push_back(std::move(entry));
  }
  return cf;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

namespace {

[[noreturn]] void entry_error(const ConfigFile& cf, const ConfigEntry& e,
                              const std::string& what) {
  throw ConfigError(cf.path + ":" + std::to_string(e.line) + ": " + what);
}

bool parse_bool(const ConfigFile& cf, const ConfigEntry& e) {
  if (e.value == "on" || e.value == "true" || e.value == "1") return true;
  if (e.value == "off" || e.value == "false" || e.value == "0") return false;
  entry_error(cf, e, "expected on/off for key '" + e.key + "'");
}

double quantity(const ConfigFile& cf, const ConfigEntry& e, Dimension dim) {
  try {
    return parse_quantity(e.value, dim, e.key);
  } catch (const ConfigError& err) {
    entry_error(cf, e, err.what());
  }
}

// Table-name parameter keys, with a few spelling aliases.
bool apply_param_key(const ConfigFile& cf, const ConfigEntry& e,
                     RobotParams* p) {
  struct ParamKey {
    const char* name;
    Dimension dim;
    double RobotParams::* field;
  };
  static const std::vector<ParamKey> scalar_keys = {
      {"Body mass", Dimension::kMass, &RobotParams::m_body},
      {"Upper limb mass", Dimension::kMass, &RobotParams::m_upper},
      {"Lower limb mass", Dimension::kMass, &RobotParams::m_lower},
      {"Palm mass", Dimension::kMass, &RobotParams::m_palm},
      {"Toe mass", Dimension::kMass, &RobotParams::m_toe},
      {"Body length", Dimension::kLength, &RobotParams::body_length},
      {"l_1", Dimension::kLength, &RobotParams::l1},
      {"l_2", Dimension::kLength, &RobotParams::l2},
      {"l_3", Dimension::kLength, &RobotParams::l3},
      {"l_4", Dimension::kLength, &RobotParams::l4},
      {"θ_3", Dimension::kAngle, &RobotParams::theta3},
      {"theta_3", Dimension::kAngle, &RobotParams::theta3},
      {"Air density", Dimension::kDensity, &RobotParams::air_density},
      {"Wing area", Dimension::kArea, &RobotParams::wing_area},
      {"Tail area", Dimension::kArea, &RobotParams::tail_area},
      {"Wing angle offset", Dimension::kAngle, &RobotParams::wing_offset},
      {"Tail angle offset", Dimension::kAngle, &RobotParams::tail_offset},
      {"Thrust angle offset", Dimension::kAngle, &RobotParams::thrust_offset},
      {"Max thrust", Dimension::kForce, &RobotParams::max_thrust},
      {"Ankle spring constant", Dimension::kSpring, &RobotParams::ankle_spring},
      {"Toe spring constant", Dimension::kSpring, &RobotParams::toe_spring},
      {"Ankle spring rest angle", Dimension::kAngle,
       &RobotParams::ankle_spring_rest},
      {"Toe spring rest angle", Dimension::kAngle,
       &RobotParams::toe_spring_rest},
      {"Gear ratio", Dimension::kNone, &RobotParams::gear_ratio},
      {"Motor max speed", Dimension::kAngularSpeed,
       &RobotParams::motor_max_speed},
      {"Motor max torque", Dimension::kTorque, &RobotParams::motor_max_torque},
      {"Motor max power", Dimension::kPower, &RobotParams::motor_max_power},
      {"Toe stop stiffness", Dimension::kSpring,
       &RobotParams::toe_stop_stiffness},
      {"Toe stop damping", Dimension::kNone, &RobotParams::toe_stop_damping},
      {"Toe joint damping", Dimension::kNone,
       &RobotParams::toe_joint_damping},
      {"Toe deflection max", Dimension::kAngle,
       &RobotParams::toe_deflection_max},
      {"Back claw reach", Dimension::kLength, &RobotParams::back_claw_reach},
  };
  for (const ParamKey& k : scalar_keys) {
    if (e.key == k.name) {
      p->*(k.field) = quantity(cf, e, k.dim);
      return true;
    }
  }
  if (e.key == "P_w,x" || e.key == "P_{w,x}") {
    p->p_wing.x() = quantity(cf, e, Dimension::kLength);
  } else if (e.key == "P_w,y" || e.key == "P_{w,y}") {
    p->p_wing.y() = quantity(cf, e, Dimension::kLength);
  } else if (e.key == "P_t,x" || e.key == "P_{t,x}") {
    p->p_tail.x() = quantity(cf, e, Dimension::kLength);
  } else if (e.key == "P_t,y" || e.key == "P_{t,y}") {
    p->p_tail.y() = quantity(cf, e, Dimension::kLength);
  } else if (e.key == "Body com offset x") {
    p->body_com_offset.x() = quantity(cf, e, Dimension::kLength);
  } else if (e.key == "Body com offset y") {
    p->body_com_offset.y() = quantity(cf, e, Dimension::kLength);
  } else {
    return false;
  }
  return true;
}

void load_params_section(const ConfigFile& cf, const ConfigSection& sec,
                         RobotParams* p) {
  for (const ConfigEntry& e : sec.entries) {
    if (!apply_param_key(cf, e, p)) {
      entry_error(cf, e, "unknown key '" + e.key + "' in [params]");
    }
  }
}

void load_initial_state(const ConfigFile& cf, const ConfigSection& sec,
                        GeneralizedState* s) {
  for (const ConfigEntry& e : sec.entries) {
    if (e.key == "Initial pitch angle") {
      s->q[2] = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "Initial hip angle") {
      s->q[3] = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "Initial ankle angle") {
      s->q[4] = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "Initial toe deflection angle") {
      s->q[5] = quantity(cf, e, Dimension::kAngle);
    } else {
      entry_error(cf, e, "unknown key '" + e.key + "' in [initial_state]");
    }
  }
}

void load_controller(const ConfigFile& cf, const ConfigSection& sec,
                     ControlConfig* cc) {
  for (const ConfigEntry& e : sec.entries) {
    if (e.key == "kp") {
      cc->horizontal_kp = cc->vertical_kp = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "kd") {
      cc->horizontal_kd = cc->vertical_kd = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "horizontal kp") {
      cc->horizontal_kp = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "horizontal kd") {
      cc->horizontal_kd = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "vertical kp") {
      cc->vertical_kp = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "vertical kd") {
      cc->vertical_kd = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "pitch kp") {
      cc->pitch_kp = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "pitch kd") {
      cc->pitch_kd = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "lambda") {
      cc->lambda = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "takeoff speed") {
      cc->takeoff_speed = quantity(cf, e, Dimension::kSpeed);
    } else if (e.key == "ramp time") {
      cc->ramp_time = quantity(cf, e, Dimension::kTime);
    } else if (e.key == "jump elevation") {
      cc->jump_elevation = quantity(cf, e, Dimension::kAngle);
      cc->jump_elevation_auto = false;
    } else if (e.key == "pitch ref") {
      cc->pitch_ref = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "hold kp") {
      cc->hold_kp = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "hold kd") {
      cc->hold_kd = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "saturate") {
      cc->saturate = parse_bool(cf, e);
    } else if (e.key == "priority") {
      std::vector<TaskId> order;
      std::istringstream ss(e.value);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok == "pitch") {
          order.push_back(TaskId::kPitch);
        } else if (tok == "horizontal") {
          order.push_back(TaskId::kHorizontal);
        } else if (tok == "vertical") {
          order.push_back(TaskId::kVertical);
        } else {
          entry_error(cf, e, "unknown task '" + tok + "' in priority list");
        }
      }
      if (order.empty()) entry_error(cf, e, "empty priority list");
      cc->priority = order;
    } else {
      entry_error(cf, e, "unknown key '" + e.key + "' in [controller]");
    }
  }
}

void load_integration(const ConfigFile& cf, const ConfigSection& sec,
                      IntegrationConfig* ic) {
  for (const ConfigEntry& e : sec.entries) {
    if (e.key == "step size") {
      ic->step = quantity(cf, e, Dimension::kTime);
    } else if (e.key == "duration") {
      ic->duration = quantity(cf, e, Dimension::kTime);
    } else if (e.key == "method") {
      if (e.value == "rk4") {
        ic->method = IntegratorKind::kRk4;
      } else if (e.value == "rk45") {
        ic->method = IntegratorKind::kRk45;
      } else {
        entry_error(cf, e, "method must be rk4 or rk45");
      }
    } else if (e.key == "rk45 tolerance") {
      ic->rk45_tol = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "baumgarte omega") {
      ic->baumgarte_omega = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "log rate") {
      ic->log_rate = quantity(cf, e, Dimension::kFrequency);
    } else if (e.key == "event tolerance") {
      ic->event_tol = quantity(cf, e, Dimension::kTime);
    } else {
      entry_error(cf, e, "unknown key '" + e.key + "' in [integration]");
    }
  }
}

void load_forces(const ConfigFile& cf, const ConfigSection& sec,
                 ForceConfig* fc) {
  for (const ConfigEntry& e : sec.entries) {
    if (e.key == "thrust") {
      fc->thrust = parse_bool(cf, e);
    } else if (e.key == "aero") {
      fc->aero = parse_bool(cf, e);
    } else if (e.key == "aero in stance") {
      fc->aero_in_stance = parse_bool(cf, e);
    } else if (e.key == "ankle spring") {
      fc->ankle_spring = parse_bool(cf, e);
    } else if (e.key == "toe spring") {
      fc->toe_spring = parse_bool(cf, e);
    } else if (e.key == "joint damping") {
      fc->joint_damping = parse_bool(cf, e);
    } else if (e.key == "aero model") {
      if (e.value == "flat_plate") {
        fc->aero_model = AeroModel::kFlatPlate;
      } else if (e.value == "thin_airfoil_with_stall") {
        fc->aero_model = AeroModel::kThinAirfoilWithStall;
      } else {
        entry_error(cf, e,
                    "aero model must be flat_plate or thin_airfoil_with_stall");
      }
    } else {
      entry_error(cf, e, "unknown key '" + e.key + "' in [forces]");
    }
  }
}

void load_gait(const ConfigFile& cf, const ConfigSection& sec,
               GaitConfig* gc) {
  for (const ConfigEntry& e : sec.entries) {
    if (e.key == "mode") {
      gc->mode = gait_mode_from_string(e.value);
    } else if (e.key == "stand height") {
      gc->stand_height = quantity(cf, e, Dimension::kLength);
    } else if (e.key == "stride") {
      gc->stride = quantity(cf, e, Dimension::kLength);
    } else if (e.key == "clearance") {
      gc->clearance = quantity(cf, e, Dimension::kLength);
    } else if (e.key == "cycle time") {
      gc->cycle_time = quantity(cf, e, Dimension::kTime);
    } else if (e.key == "foot offset") {
      gc->foot_offset = quantity(cf, e, Dimension::kLength);
    } else if (e.key == "extension") {
      gc->extension = quantity(cf, e, Dimension::kNone);
    } else if (e.key == "push time") {
      gc->push_time = quantity(cf, e, Dimension::kTime);
    } else if (e.key == "jump angle") {
      gc->jump_angle = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "height jump angle") {
      gc->height_jump_angle = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "hop angle") {
      gc->hop_angle = quantity(cf, e, Dimension::kAngle);
    } else if (e.key == "n_steps") {
      gc->n_steps = static_cast<int>(quantity(cf, e, Dimension::kNone));
    } else if (e.key == "hip delay") {
      gc->hip_delay = quantity(cf, e, Dimension::kTime);
    } else if (e.key == "sample rate") {
      gc->sample_rate = quantity(cf, e, Dimension::kFrequency);
    } else {
      entry_error(cf, e, "unknown key '" + e.key + "' in [gait]");
    }
  }
}

Dimension override_dimension(const std::string& key) {
  if (key == "Gear ratio" || key == "thrust level" || key == "horizontal kp" ||
      key == "horizontal kd" || key == "vertical kp" || key == "vertical kd" ||
      key == "pitch kp" || key == "pitch kd") {
    return Dimension::kNone;
  }
  if (key == "Motor max speed") return Dimension::kAngularSpeed;
  if (key == "Motor max torque") return Dimension::kTorque;
  if (key == "Motor max power") return Dimension::kPower;
  if (key == "Ankle spring constant" || key == "Toe spring constant") {
    return Dimension::kSpring;
  }
  if (key == "Max thrust") return Dimension::kForce;
  if (key == "ramp time" || key == "step size") return Dimension::kTime;
  if (key == "takeoff speed") return Dimension::kSpeed;
  if (key == "jump elevation") return Dimension::kAngle;
  throw ConfigError("unknown sweep key: " + key);
}

void load_sweep(const ConfigFile& cf, const ConfigSection& sec,
                LoadedConfig* out) {
  for (const ConfigEntry& e : sec.entries) {
    if (e.key == "parallel") {
      out->sweep_parallel = parse_bool(cf, e);
      continue;
    }
    Dimension dim;
    try {
      dim = override_dimension(e.key);
    } catch (const ConfigError& err) {
      entry_error(cf, e, err.what());
    }
    SweepAxis axis;
    axis.key = e.key;
    std::istringstream ss(e.value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        axis.values.push_back(parse_quantity(trim(tok), dim, e.key));
      } catch (const ConfigError& err) {
        entry_error(cf, e, err.what());
      }
    }
    if (axis.values.empty()) entry_error(cf, e, "empty sweep axis");
    out->sweep_axes.push_back(std::move(axis));
  }
}

void load_thrust(const ConfigFile& cf, const ConfigSection& sec,
                 ThrustSchedule* ts) {
  ts->points.clear();
  for (const ConfigEntry& e : sec.entries) {
    double t = 0.0, level = 0.0;
    try {
      t = parse_quantity(e.key, Dimension::kTime, "thrust time");
      level = parse_quantity(e.value, Dimension::kNone, "thrust level");
    } catch (const ConfigError& err) {
      entry_error(cf, e, err.what());
    }
    if (level < 0.0 || level > 1.0) {
      entry_error(cf, e, "thrust level must be within [0, 1]");
    }
    ts->points.emplace_back(t, level);
  }
  if (ts->points.empty()) ts->points = {{0.0, 0.0}};
}

}  // namespace

LoadedConfig parse_config(const std::string& text, const std::string& path) {
  const ConfigFile cf = ConfigFile::parse(text, path);
  LoadedConfig out;
  out.scenario = default_scenario();

  for (const ConfigSection& sec : cf.sections) {
    if (sec.name.empty()) {
      if (!sec.entries.empty()) {
        entry_error(cf, sec.entries.front(),
                    "keys must appear inside a [section]");
      }
    } else if (sec.name == "params") {
      load_params_section(cf, sec, &out.scenario.params);
    } else if (sec.name == "initial_state") {
      load_initial_state(cf, sec, &out.scenario.initial);
    } else if (sec.name == "controller") {
      load_controller(cf, sec, &out.scenario.controller);
    } else if (sec.name == "integration") {
      load_integration(cf, sec, &out.scenario.integration);
    } else if (sec.name == "forces") {
      load_forces(cf, sec, &out.scenario.forces);
    } else if (sec.name == "thrust_schedule") {
      load_thrust(cf, sec, &out.scenario.thrust);
    } else if (sec.name == "flight") {
      for (const ConfigEntry& e : sec.entries) {
        if (e.key == "horizon") {
          out.scenario.flight_horizon = quantity(cf, e, Dimension::kTime);
        } else if (e.key == "elevator") {
          out.scenario.elevator_trim = quantity(cf, e, Dimension::kAngle);
        } else if (e.key == "aileron") {
          out.scenario.aileron_trim = quantity(cf, e, Dimension::kAngle);
        } else {
          entry_error(cf, e, "unknown key '" + e.key + "' in [flight]");
        }
      }
    } else if (sec.name == "gait") {
      load_gait(cf, sec, &out.gait);
    } else if (sec.name == "sweep") {
      load_sweep(cf, sec, &out);
    } else {
      throw ConfigError(cf.path + ": unknown section [" + sec.name + "]");
    }
  }
  out.scenario.params.validate();
  return out;
}

LoadedConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

RobotParams load_params(const std::string& path) {
  const ConfigFile cf = ConfigFile::load(path);
  RobotParams p;
  bool any = false;
  for (const ConfigSection& sec : cf.sections) {
    if (!sec.name.empty() && sec.name != "params") continue;
    for (const ConfigEntry& e : sec.entries) {
      if (!apply_param_key(cf, e, &p)) {
        entry_error(cf, e, "unknown parameter key '" + e.key + "'");
      }
      any = true;
    }
  }
  if (!any) throw ConfigError(path + ": no parameter keys found");
  p.validate();
  return p;
}

std::string default_config_text() {
  return R"(# Jumping take-off scenario, table-default parameters.

[params]
Body mass = 0.5 kg
Upper limb mass = 0.015 kg
Lower limb mass = 0.015 kg
Palm mass = 0.015 kg
Toe mass = 0.005 kg
Body length = 0.5 m
l_1 = 0.12 m
l_2 = 0.12 m
l_3 = 0.023 m
l_4 = 0.06 m
theta_3 = 45 deg
Air density = 1.225 kg/m^3
Wing area = 0.18 m^2
Tail area = 0.0864 m^2
Wing angle offset = 7 deg
Tail angle offset = 1 deg
Thrust angle offset = 7 deg
Max thrust = 0.63 kgf
Ankle spring constant = 3.207 Nmm/deg
Toe spring constant = 6.249 Nmm/deg
Ankle spring rest angle = 0 deg
Toe spring rest angle = 25 deg
P_w,x = -0.02 m
P_w,y = 0.042 m
P_t,x = -0.28 m
P_t,y = 0.074 m
Gear ratio = 19.13
Motor max speed = 99900 deg/s
Motor max torque = 0.30 Nm
Motor max power = 60 W
Toe deflection max = 25 deg
Back claw reach = 0.03 m

[initial_state]
Initial pitch angle = 10 deg
Initial hip angle = 135 deg
Initial ankle angle = 145 deg
Initial toe deflection angle = 25 deg

[controller]
pitch kp = 400
pitch kd = 60
horizontal kp = 400
horizontal kd = 40
vertical kp = 400
vertical kd = 200
lambda = 1e-6
priority = pitch, horizontal, vertical
takeoff speed = 2.75 m/s
ramp time = 0.1833 s
jump elevation = 68 deg
hold kp = 100
hold kd = 0.6
saturate = on

[thrust_schedule]
0.0 s = 0.5
0.2 s = 0.0

[integration]
step size = 1e-4 s
duration = 0.45 s
method = rk4
baumgarte omega = 100
log rate = 1000 Hz
event tolerance = 1e-6 s

[forces]
thrust = on
aero = on
aero in stance = on
ankle spring = on
toe spring = on
aero model = flat_plate

[flight]
horizon = 1.0 s

[gait]
mode = walk
stand height = 0.15 m
stride = 0.08 m
clearance = 0.03 m
cycle time = 0.6957 s
n_steps = 0
hip delay = 0 s
sample rate = 500 Hz
)";
}

}  // namespace legsim
