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

#ifndef LEGSIM_SVG_H_
#define LEGSIM_SVG_H_

#include <string>
#include <vector>

namespace legsim {

// Minimal line-plot writer; enough for run summaries, not a plotting library.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_line(const std::vector<double>& x, const std::vector<double>& y,
                const std::string& color, const std::string& label = "");
  void add_vline(double x, const std::string& color);

  std::string render() const;

 private:
  struct Line {
    std::vector<double> x, y;
    std::string color, label;
  };
  std::string title_, x_label_, y_label_;
  std::vector<Line> lines_;
  std::vector<std::pair<double, std::string>> vlines_;
};

}  // namespace legsim

#endif  // LEGSIM_SVG_H_
