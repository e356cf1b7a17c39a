// Copyright 2026 The cfpgn Authors
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
//
// Standalone SVG pictures of a combined graph.  Rendering is the one
// deliberately inexact corner of the library: coordinates pass through
// doubles and are printed with fixed six-digit precision, so the same
// graph and configuration always produce byte-identical output (no
// timestamps, no generated ids).

#ifndef CFPGN_SVG_HPP_
#define CFPGN_SVG_HPP_

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfpgn/envelope.hpp"
#include "cfpgn/lattice.hpp"
#include "cfpgn/rational.hpp"
#include "cfpgn/trajectory.hpp"

namespace cfpgn {

struct RenderConfig {
  double q_max = 0;  // right edge of the plot; 0 picks one automatically
  int width = 900;
  int height = 480;
  bool show_trajectories = false;  // dashed cost curves of all owners
  bool show_q_labels = true;       // q0, q1, ... under the axis dots
};

namespace detail {

inline std::string svg_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  std::string s(buf);
  return s == "-0.000000" ? "0.000000" : s;
}

// Vertices of one curve as doubles, clipped or extended to end exactly at
// q_max.  Slopes come from the exact data, so clipping never guesses.
inline std::vector<std::pair<double, double>> curve_points(
    const PiecewiseLinear& curve, double q_max) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    const double q = curve.vertices[i].q.value();
    const double v = curve.vertices[i].v.value();
    if (q >= q_max && !pts.empty()) {
      const int slope = curve.segment_slope(i - 1);
      const auto& [pq, pv] = pts.back();
      pts.emplace_back(q_max, pv + slope * (q_max - pq));
      return pts;
    }
    pts.emplace_back(q, v);
  }
  const auto& [lq, lv] = pts.back();
  if (lq < q_max) {
    if (curve.tail) {
      pts.emplace_back(q_max, lv + curve.tail->slope * (q_max - lq));
    }
    // A truncated curve simply stops early.
  }
  return pts;
}

}  // namespace detail

// Renders both curves, dots on the axis at every detected maximum, and
// (optionally) the dashed cost curves of every owning lattice point.
inline std::string render_svg(const CombinedGraph& graph,
                              const RenderConfig& config = {}) {
  if (config.width < 200 || config.height < 120) {
    throw std::invalid_argument("render_svg: canvas too small");
  }
  if (config.q_max < 0) {
    throw std::invalid_argument("render_svg: q_max must be nonnegative");
  }

  const double last_q = graph.L1.vertices.back().q.value();
  double q_max = config.q_max;
  if (q_max == 0) {
    q_max = last_q > 0 ? 1.15 * last_q : 1.0;
  }
  if (graph.truncated) {
    // Nothing exists past the last built vertex.
    if (config.q_max > last_q) {
      throw std::invalid_argument(
          "render_svg: q_max exceeds the truncated graph's range");
    }
    q_max = std::min(q_max, last_q);
  }
  detail::require(q_max > 0, "render_svg: empty abscissa range");

  const auto l1 = detail::curve_points(graph.L1, q_max);
  const auto l2 = detail::curve_points(graph.L2, q_max);

  double v_min = 0, v_max = 0;
  for (const auto& [q, v] : l1) {
    v_min = std::min(v_min, v);
    v_max = std::max(v_max, v);
  }
  for (const auto& [q, v] : l2) {
    v_min = std::min(v_min, v);
    v_max = std::max(v_max, v);
  }
  const double pad = std::max(0.08 * (v_max - v_min), 0.05);
  v_min -= pad;
  v_max += pad;

  const double ml = 50, mr = 20, mt = 20, mb = 35;
  const double plot_w = config.width - ml - mr;
  const double plot_h = config.height - mt - mb;
  const auto x_of = [&](double q) { return ml + plot_w * q / q_max; };
  const auto y_of = [&](double v) {
    return mt + plot_h * (v_max - v) / (v_max - v_min);
  };
  const auto polyline = [&](const std::vector<std::pair<double, double>>& pts,
                            const std::string& attrs) {
    std::string out = "  <polyline " + attrs + " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) out += " ";
      out += detail::svg_num(x_of(pts[i].first)) + "," +
             detail::svg_num(y_of(pts[i].second));
    }
    out += "\"/>\n";
    return out;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(config.width) + "\" height=\"" +
         std::to_string(config.height) + "\" viewBox=\"0 0 " +
         std::to_string(config.width) + " " + std::to_string(config.height) +
         "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  // Axes: the vertical line q = 0 and the horizontal line of value 0.
  svg += "  <line class=\"axis\" x1=\"" + detail::svg_num(x_of(0)) +
         "\" y1=\"" + detail::svg_num(mt) + "\" x2=\"" +
         detail::svg_num(x_of(0)) + "\" y2=\"" +
         detail::svg_num(mt + plot_h) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  svg += "  <line class=\"axis\" x1=\"" + detail::svg_num(ml) + "\" y1=\"" +
         detail::svg_num(y_of(0)) + "\" x2=\"" + detail::svg_num(ml + plot_w) +
         "\" y2=\"" + detail::svg_num(y_of(0)) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

  if (config.show_trajectories) {
    // Dashed cost curve of every distinct owner, drawn under the envelope.
    std::set<LatticePoint> owners;
    for (const PiecewiseLinear* curve : {&graph.L1, &graph.L2}) {
      owners.insert(curve->owners.begin(), curve->owners.end());
      if (curve->tail) owners.insert(curve->tail->owner);
    }
    for (const LatticePoint& owner : owners) {
      const Trajectory t(owner, graph.xi);
      std::vector<std::pair<double, double>> pts;
      const double fall = t.has_falling() ? t.falling_level().value() : 0;
      const double rise = t.has_rising() ? t.rising_level().value() : 0;
      if (t.has_falling() && t.has_rising()) {
        const double corner_q = (fall - rise) / 2;
        pts.emplace_back(0, std::max(fall, rise));
        if (corner_q > 0 && corner_q < q_max) {
          pts.emplace_back(corner_q, (fall + rise) / 2);
        }
        pts.emplace_back(q_max, std::max(fall - q_max, rise + q_max));
      } else if (t.has_falling()) {
        pts = {{0, fall}, {q_max, fall - q_max}};
      } else {
        pts = {{0, rise}, {q_max, rise + q_max}};
      }
      svg += polyline(pts,
                      "class=\"trajectory\" fill=\"none\" stroke=\"#999999\" "
                      "stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    }
  }

  svg += polyline(l1,
                  "class=\"L1\" fill=\"none\" stroke=\"#1f77b4\" "
                  "stroke-width=\"2\"");
  svg += polyline(l2,
                  "class=\"L2\" fill=\"none\" stroke=\"#d62728\" "
                  "stroke-width=\"2\"");

  // A dot on the value-0 axis at every maximum of the lower curve.
  std::size_t label = 0;
  for (const LogCoord& q : graph.q_maxima) {
    const double qd = q.value();
    if (qd > q_max) break;
    svg += "  <circle class=\"axis-dot\" cx=\"" + detail::svg_num(x_of(qd)) +
           "\" cy=\"" + detail::svg_num(y_of(0)) +
           "\" r=\"3\" fill=\"#000000\"/>\n";
    if (config.show_q_labels) {
      svg += "  <text class=\"q-label\" x=\"" + detail::svg_num(x_of(qd)) +
             "\" y=\"" + detail::svg_num(mt + plot_h + 16) +
             "\" font-family=\"monospace\" font-size=\"11\" "
             "text-anchor=\"middle\" fill=\"#000000\">q" +
             std::to_string(label) + "</text>\n";
    }
    ++label;
  }

  // Curve tags in the top-right corner.
  svg += "  <text class=\"legend\" x=\"" + detail::svg_num(ml + plot_w - 46) +
         "\" y=\"" + detail::svg_num(mt + 14) +
         "\" font-family=\"monospace\" font-size=\"12\" "
         "fill=\"#1f77b4\">L1</text>\n";
  svg += "  <text class=\"legend\" x=\"" + detail::svg_num(ml + plot_w - 22) +
         "\" y=\"" + detail::svg_num(mt + 14) +
         "\" font-family=\"monospace\" font-size=\"12\" "
         "fill=\"#d62728\">L2</text>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace cfpgn

#endif  // CFPGN_SVG_HPP_
