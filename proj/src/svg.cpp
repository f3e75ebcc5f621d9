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

#include "legsim/svg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace legsim {

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgPlot::add_line(const std::vector<double>& x,
                       const std::vector<double>& y, const std::string& color,
                       const std::string& label) {
  lines_.push_back({x, y, color, label});
}

void SvgPlot::add_vline(double x, const std::string& color) {
  vlines_.emplace_back(x, color);
}

std::string SvgPlot::render() const {
  const double w = 640, h = 420;
  const double ml = 64, mr = 16, mt = 36, mb = 48;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Line& l : lines_) {
    for (double v : l.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : l.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(xmax > xmin)) {
    xmin -= 1;
    xmax += 1;
  }
  if (!(ymax > ymin)) {
    ymin -= 1;
    ymax += 1;
  }
  const double pad = 0.04;
  const double xr = xmax - xmin, yr = ymax - ymin;
  xmin -= pad * xr;
  xmax += pad * xr;
  ymin -= pad * yr;
  ymax += pad * yr;

  auto px = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr);
  };
  auto py = [&](double y) {
    return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title_
      << "</text>\n";

  // Axes with 5 ticks per side.
  out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    out << "<line x1=\"" << px(fx) << "\" y1=\"" << h - mb << "\" x2=\""
        << px(fx) << "\" y2=\"" << h - mb + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(fx) << "\" y=\"" << h - mb + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << static_cast<float>(fx) << "</text>\n";
    out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << ml
        << "\" y2=\"" << py(fy) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml - 8 << "\" y=\"" << py(fy) + 3
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << static_cast<float>(fy) << "</text>\n";
  }
  out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">"
      << x_label_ << "</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 "
      << (mt + h - mb) / 2 << ")\">" << y_label_ << "</text>\n";

  for (const auto& [x, color] : vlines_) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << mt << "\" x2=\"" << px(x)
        << "\" y2=\"" << h - mb << "\" stroke=\"" << color
        << "\" stroke-dasharray=\"4 3\"/>\n";
  }

  int label_row = 0;
  for (const Line& l : lines_) {
    out << "<polyline fill=\"none\" stroke=\"" << l.color
        << "\" stroke-width=\"1.5\" points=\"";
    const size_t n = std::min(l.x.size(), l.y.size());
    for (size_t i = 0; i < n; ++i) {
      if (!std::isfinite(l.x[i]) || !std::isfinite(l.y[i])) continue;
      out << px(l.x[i]) << "," << py(l.y[i]) << " ";
    }
    out << "\"/>\n";
    if (!l.label.empty()) {
      const double ly = mt + 14 + 14 * label_row++;
      out << "<line x1=\"" << w - mr - 90 << "\" y1=\"" << ly << "\" x2=\""
          << w - mr - 70 << "\" y2=\"" << ly << "\" stroke=\"" << l.color
          << "\" stroke-width=\"2\"/>\n";
      out << "<text x=\"" << w - mr - 65 << "\" y=\"" << ly + 4
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << l.label
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace legsim
