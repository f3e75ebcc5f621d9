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

#include "legsim/log_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace legsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, int line) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("csv line " + std::to_string(line) +
                      ": bad numeric field '" + s + "'");
  }
}

struct CsvReader {
  std::vector<std::vector<std::string>> rows;
  std::string header;

  static CsvReader parse(const std::string& text, const char* expect_header,
                         size_t columns) {
    CsvReader r;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (lineno == 1) {
        r.header = line;
        if (expect_header && line != expect_header) {
          throw ConfigError(std::string("unexpected csv header: ") + line);
        }
        continue;
      }
      auto fields = split(line, ',');
      if (columns && fields.size() != columns) {
        throw ConfigError("csv line " + std::to_string(lineno) +
                          ": expected " + std::to_string(columns) +
                          " fields, got " + std::to_string(fields.size()));
      }
      r.rows.push_back(std::move(fields));
    }
    return r;
  }
};

}  // namespace

std::string trajectory_csv(const TrajectoryLog& log) {
  std::string out = kTrajectoryHeader;
  out.push_back('\n');
  for (const LogSample& s : log.samples) {
    std::string row = format_double(s.t);
    for (int i = 0; i < 6; ++i) row += "," + format_double(s.q[i]);
    for (int i = 0; i < 6; ++i) row += "," + format_double(s.qd[i]);
    row += "," + format_double(s.tau[0]);
    row += "," + format_double(s.tau[1]);
    row += "," + format_double(s.f_net[0]);
    row += "," + format_double(s.f_net[1]);
    row += std::string(",") + to_string(s.mode);
    row += "," + format_double(s.com[0]);
    row += "," + format_double(s.com[1]);
    row += "," + format_double(s.vcom[0]);
    row += "," + format_double(s.vcom[1]);
    row += "," + format_double(s.power);
    row += "," + format_double(s.energy);
    out += row;
    out.push_back('\n');
  }
  return out;
}

std::string events_csv(const TrajectoryLog& log) {
  std::string out = kEventsHeader;
  out.push_back('\n');
  for (const Event& e : log.events) {
    out += format_double(e.t);
    out.push_back(',');
    out += to_string(e.kind);
    out.push_back('\n');
  }
  return out;
}

std::string joint_reference_csv(const JointReference& ref) {
  std::string out = kJointReferenceHeader;
  out.push_back('\n');
  for (size_t i = 0; i < ref.size(); ++i) {
    out += format_double(ref.t[i]);
    out += "," + format_double(ref.hip_pos[i]);
    out += "," + format_double(ref.ankle_pos[i]);
    out += "," + format_double(ref.hip_vel[i]);
    out += "," + format_double(ref.ankle_vel[i]);
    out.push_back('\n');
  }
  return out;
}

std::vector<LogSample> read_trajectory_csv(const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kTrajectoryHeader, 24);
  std::vector<LogSample> out;
  out.reserve(r.rows.size());
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    LogSample s;
    int c = 0;
    s.t = to_double(f[c++], line);
    for (int i = 0; i < 6; ++i) s.q[i] = to_double(f[c++], line);
    for (int i = 0; i < 6; ++i) s.qd[i] = to_double(f[c++], line);
    s.tau[0] = to_double(f[c++], line);
    s.tau[1] = to_double(f[c++], line);
    s.f_net[0] = to_double(f[c++], line);
    s.f_net[1] = to_double(f[c++], line);
    s.mode = contact_mode_from_string(f[c++]);
    s.com[0] = to_double(f[c++], line);
    s.com[1] = to_double(f[c++], line);
    s.vcom[0] = to_double(f[c++], line);
    s.vcom[1] = to_double(f[c++], line);
    s.power = to_double(f[c++], line);
    s.energy = to_double(f[c++], line);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<double, EventKind>> read_events_csv(
    const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kEventsHeader, 2);
  std::vector<std::pair<double, EventKind>> out;
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    EventKind kind;
    if (f[1] == "toe_saturation") {
      kind = EventKind::kToeSaturation;
    } else if (f[1] == "take_off") {
      kind = EventKind::kTakeOff;
    } else if (f[1] == "touchdown") {
      kind = EventKind::kTouchdown;
    } else if (f[1] == "stop") {
      kind = EventKind::kStop;
    } else {
      throw ConfigError("unknown event kind: " + f[1]);
    }
    out.emplace_back(to_double(f[0], line), kind);
  }
  return out;
}

JointReference read_joint_reference_csv(const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kJointReferenceHeader, 5);
  JointReference ref;
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    ref.t.push_back(to_double(f[0], line));
    ref.hip_pos.push_back(to_double(f[1], line));
    ref.ankle_pos.push_back(to_double(f[2], line));
    ref.hip_vel.push_back(to_double(f[3], line));
    ref.ankle_vel.push_back(to_double(f[4], line));
  }
  return ref;
}

std::vector<PowerSample> read_power_csv(const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kPowerHeader, 3);
  std::vector<PowerSample> out;
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    out.push_back(electrical_power(to_double(f[0], line),
                                   to_double(f[1], line),
                                   to_double(f[2], line)));
  }
  return out;
}

SpeedSeries read_speed_csv(const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kSpeedHeader, 2);
  SpeedSeries out;
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    out.t.push_back(to_double(f[0], line));
    out.v.push_back(to_double(f[1], line));
  }
  return out;
}

XySeries read_xy_csv(const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kXyHeader, 3);
  XySeries out;
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    out.t.push_back(to_double(f[0], line));
    out.x.push_back(to_double(f[1], line));
    out.y.push_back(to_double(f[2], line));
  }
  return out;
}

std::vector<std::pair<double, double>> read_mass_pairs_csv(
    const std::string& text) {
  const CsvReader r = CsvReader::parse(text, kMassPairsHeader, 2);
  std::vector<std::pair<double, double>> out;
  int line = 1;
  for (const auto& f : r.rows) {
    ++line;
    out.emplace_back(to_double(f[0], line), to_double(f[1], line));
  }
  return out;
}

CsvKind sniff_csv(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) return CsvKind::kUnknown;
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header == kTrajectoryHeader) return CsvKind::kTrajectory;
  if (header == kEventsHeader) return CsvKind::kEvents;
  if (header == kJointReferenceHeader) return CsvKind::kJointReference;
  if (header == kPowerHeader) return CsvKind::kPower;
  if (header == kSpeedHeader) return CsvKind::kSpeed;
  if (header == kXyHeader) return CsvKind::kXy;
  if (header == kMassPairsHeader) return CsvKind::kMassPairs;
  return CsvKind::kUnknown;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace legsim
