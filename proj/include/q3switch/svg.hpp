// Copyright 2026 The q3switch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace q3switch {

/// Minimal SVG line plot: axes, ticks, polylines, legend. CSV remains the
/// canonical output; this is a quick-look convenience.
class SvgLinePlot {
 public:
  void add_series(const std::string& name, const std::vector<double>& xs,
                  const std::vector<double>& ys) {
    series_.push_back({name, xs, ys});
  }

  std::string render(const std::string& title, const std::string& x_label,
                     const std::string& y_label) const {
    constexpr double width = 800, height = 520;
    constexpr double left = 70, right = 660, top = 50, bottom = 470;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series_) {
      for (std::size_t i = 0; i < s.xs.size(); ++i) {
        if (first) {
          xmin = xmax = s.xs[i];
          ymin = ymax = s.ys[i];
          first = false;
        }
        xmin = std::min(xmin, s.xs[i]);
        xmax = std::max(xmax, s.xs[i]);
        ymin = std::min(ymin, s.ys[i]);
        ymax = std::max(ymax, s.ys[i]);
      }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    ymax += 0.05 * (ymax - ymin);

    auto px = [&](double x) {
      return left + (x - xmin) / (xmax - xmin) * (right - left);
    };
    auto py = [&](double y) {
      return bottom - (y - ymin) / (ymax - ymin) * (bottom - top);
    };
    auto num = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", v);
      return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
           " " + num(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num((left + right) / 2) + "\" y=\"28\" " +
           "text-anchor=\"middle\" font-size=\"16\">" + title + "</text>\n";

    for (int t = 0; t <= 5; ++t) {
      const double xv = xmin + (xmax - xmin) * t / 5.0;
      const double yv = ymin + (ymax - ymin) * t / 5.0;
      svg += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(bottom) +
             "\" x2=\"" + num(px(xv)) + "\" y2=\"" + num(bottom + 6) +
             "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(bottom + 20) +
             "\" text-anchor=\"middle\" font-size=\"11\">" + num(xv) +
             "</text>\n";
      svg += "<line x1=\"" + num(left - 6) + "\" y1=\"" + num(py(yv)) +
             "\" x2=\"" + num(left) + "\" y2=\"" + num(py(yv)) +
             "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + num(left - 10) + "\" y=\"" + num(py(yv) + 4) +
             "\" text-anchor=\"end\" font-size=\"11\">" + num(yv) +
             "</text>\n";
    }
    svg += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" +
           num(right - left) + "\" height=\"" + num(bottom - top) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num((left + right) / 2) + "\" y=\"" +
           num(height - 10) + "\" text-anchor=\"middle\" font-size=\"13\">" +
           x_label + "</text>\n";
    svg += "<text x=\"18\" y=\"" + num((top + bottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
           "18 " +
           num((top + bottom) / 2) + ")\">" + y_label + "</text>\n";

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf"};
    for (std::size_t s = 0; s < series_.size(); ++s) {
      const auto& cur = series_[s];
      const char* color = palette[s % 10];
      std::string points;
      for (std::size_t i = 0; i < cur.xs.size(); ++i) {
        points += num(px(cur.xs[i])) + "," + num(py(cur.ys[i])) + " ";
      }
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
      const double ly = top + 16 + 16 * static_cast<double>(s);
      svg += "<line x1=\"" + num(right + 8) + "\" y1=\"" + num(ly - 4) +
             "\" x2=\"" + num(right + 28) + "\" y2=\"" + num(ly - 4) +
             "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
      svg += "<text x=\"" + num(right + 32) + "\" y=\"" + num(ly) +
             "\" font-size=\"11\">" + cur.name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
  }

 private:
  struct Series {
    std::string name;
    std::vector<double> xs, ys;
  };
  std::vector<Series> series_;
};

}  // namespace q3switch
