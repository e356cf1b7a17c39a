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

#include "cfpgn/svg.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cfpgn/envelope.hpp"
#include "cfpgn/rational.hpp"

namespace cfpgn {
namespace {

Rational frac(long long num, long long den) {
  return Rational(BigInt(num), BigInt(den));
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

// The coordinate pairs of the first polyline carrying the given class.
std::vector<std::pair<double, double>> points_of(const std::string& svg,
                                                 const std::string& klass) {
  const std::string tag = "class=\"" + klass + "\"";
  const auto at = svg.find(tag);
  REQUIRE(at != std::string::npos);
  const auto open = svg.find("points=\"", at);
  REQUIRE(open != std::string::npos);
  const auto start = open + 8;
  const auto end = svg.find('"', start);
  REQUIRE(end != std::string::npos);

  std::vector<std::pair<double, double>> pts;
  std::istringstream in(svg.substr(start, end - start));
  std::string token;
  while (in >> token) {
    const auto comma = token.find(',');
    REQUIRE(comma != std::string::npos);
    pts.emplace_back(std::stod(token.substr(0, comma)),
                     std::stod(token.substr(comma + 1)));
  }
  return pts;
}

// Signs of the value slopes along a polyline.  SVG y grows downward, so a
// falling value shows up as a growing y coordinate.
std::vector<int> value_slope_signs(
    const std::vector<std::pair<double, double>>& pts) {
  std::vector<int> signs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    signs.push_back(pts[i].second > pts[i + 1].second ? +1 : -1);
  }
  return signs;
}

TEST_CASE("the picture of 3/7 has the frozen structure") {
  const CombinedGraph graph = build_graph(frac(3, 7));
  const std::string svg = render_svg(graph);

  REQUIRE(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  REQUIRE(svg.substr(svg.size() - 7) == "</svg>\n");

  CHECK(count_of(svg, "class=\"L1\"") == 1);
  CHECK(count_of(svg, "class=\"L2\"") == 1);
  CHECK(count_of(svg, "class=\"axis-dot\"") == 3);
  CHECK(count_of(svg, "class=\"q-label\"") == 3);
  CHECK(count_of(svg, "class=\"trajectory\"") == 0);
  CHECK(count_of(svg, "class=\"axis\"") == 2);
  CHECK(svg.find(">q0<") != std::string::npos);
  CHECK(svg.find(">q2<") != std::string::npos);
  CHECK(svg.find(">q3<") == std::string::npos);

  // Five exact vertices plus the tail extension to the right edge.
  const auto l1 = points_of(svg, "L1");
  REQUIRE(l1.size() == 6);
  CHECK(value_slope_signs(l1) == std::vector<int>{-1, +1, -1, +1, -1});

  // Nine exact vertices plus the tail extension.  The second curve leaves
  // the origin falling: its first crossing happens at q = 0 itself.
  const auto l2 = points_of(svg, "L2");
  REQUIRE(l2.size() == 10);
  CHECK(value_slope_signs(l2) ==
        std::vector<int>{-1, +1, -1, +1, -1, +1, -1, +1, +1});

  for (const auto& pts : {l1, l2}) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      CHECK(pts[i].first < pts[i + 1].first);
    }
  }
}

TEST_CASE("the same graph renders to identical bytes") {
  const CombinedGraph graph = build_graph(frac(3, 7));
  CHECK(render_svg(graph) == render_svg(graph));

  RenderConfig config;
  config.show_trajectories = true;
  config.q_max = 2.5;
  CHECK(render_svg(graph, config) == render_svg(graph, config));
  CHECK(render_svg(graph, config) != render_svg(graph));
}

TEST_CASE("labels and trajectories are optional layers") {
  const CombinedGraph graph = build_graph(frac(3, 7));

  RenderConfig quiet;
  quiet.show_q_labels = false;
  const std::string bare = render_svg(graph, quiet);
  CHECK(count_of(bare, "class=\"q-label\"") == 0);
  CHECK(count_of(bare, "class=\"axis-dot\"") == 3);

  RenderConfig dashed;
  dashed.show_trajectories = true;
  const std::string full = render_svg(graph, dashed);
  // Distinct owners across both curves and tails:
  // (1,0), (1,1), (2,1), (3,1), (5,2), (7,3).
  CHECK(count_of(full, "class=\"trajectory\"") == 6);
  CHECK(count_of(full, "stroke-dasharray") == 6);
}

TEST_CASE("a small right edge clips the curves") {
  const CombinedGraph graph = build_graph(frac(3, 7));
  RenderConfig config;
  config.q_max = 0.2;
  const std::string svg = render_svg(graph, config);

  // Only q_0 = 0 is inside the window.
  CHECK(count_of(svg, "class=\"axis-dot\"") == 1);

  // The first breakpoint of L1 sits at half log(7/3) > 0.2, so the clipped
  // polyline is a single falling segment ending at the right plot edge.
  const auto l1 = points_of(svg, "L1");
  REQUIRE(l1.size() == 2);
  CHECK(value_slope_signs(l1) == std::vector<int>{-1});
  CHECK(l1.back().first == Catch::Approx(900 - 20));
}

TEST_CASE("a truncated graph stops at its last vertex") {
  const CombinedGraph graph = build_graph(frac(21, 55), 3);
  REQUIRE(graph.truncated);
  const std::string svg = render_svg(graph);

  CHECK(count_of(svg, "class=\"axis-dot\"") == 4);

  // No tail extension: every polyline point is an exact vertex, and the
  // last one touches the right plot edge.
  const auto l1 = points_of(svg, "L1");
  REQUIRE(l1.size() == graph.L1.vertices.size());
  CHECK(l1.back().first == Catch::Approx(900 - 20));

  CHECK(render_svg(graph) == render_svg(graph));

  // There is nothing to draw past the truncation point.
  RenderConfig wide;
  wide.q_max = 100.0;
  CHECK_THROWS_AS(render_svg(graph, wide), std::invalid_argument);
}

TEST_CASE("zero still has a picture") {
  const CombinedGraph graph = build_graph(Rational(0));
  const std::string svg = render_svg(graph);

  CHECK(count_of(svg, "class=\"axis-dot\"") == 1);

  const auto l1 = points_of(svg, "L1");
  const auto l2 = points_of(svg, "L2");
  REQUIRE(l1.size() == 2);
  REQUIRE(l2.size() == 2);
  CHECK(value_slope_signs(l1) == std::vector<int>{-1});
  CHECK(value_slope_signs(l2) == std::vector<int>{+1});
  CHECK(render_svg(graph) == render_svg(graph));
}

TEST_CASE("bad configurations are rejected") {
  const CombinedGraph graph = build_graph(frac(1, 2));

  RenderConfig narrow;
  narrow.width = 100;
  CHECK_THROWS_AS(render_svg(graph, narrow), std::invalid_argument);

  RenderConfig flat;
  flat.height = 50;
  CHECK_THROWS_AS(render_svg(graph, flat), std::invalid_argument);

  RenderConfig backwards;
  backwards.q_max = -1.0;
  CHECK_THROWS_AS(render_svg(graph, backwards), std::invalid_argument);
}

}  // namespace
}  // namespace cfpgn
