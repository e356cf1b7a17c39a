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

#ifndef CFPGN_ENVELOPE_HPP_
#define CFPGN_ENVELOPE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfpgn/cf.hpp"
#include "cfpgn/lattice.hpp"
#include "cfpgn/logcoord.hpp"
#include "cfpgn/rational.hpp"
#include "cfpgn/trajectory.hpp"

namespace cfpgn {

// Half line of slope +1 or -1 continuing a curve past its last vertex,
// traced by the cost curve of `owner`.
struct Ray {
  int slope = 0;  // +1 or -1
  LatticePoint owner;
};

// A continuous piecewise-linear curve in the (q, value) plane whose segments
// all have slope +1 or -1.  Vertices are strictly increasing in q;
// owners[i] is the lattice point whose cost curve traces the segment from
// vertices[i] to vertices[i+1].  A complete curve carries a tail ray past
// the last vertex; a truncated curve simply stops there.
struct PiecewiseLinear {
  std::vector<LogPoint> vertices;
  std::vector<LatticePoint> owners;  // size = vertices.size() - 1
  std::optional<Ray> tail;

  bool complete() const { return tail.has_value(); }

  // Slope of the segment leaving vertices[i]: +1 when the value rises,
  // -1 when it falls.  Values at consecutive vertices never tie because
  // every segment has slope exactly +-1 over a positive q step.
  int segment_slope(std::size_t i) const {
    if (i + 1 >= vertices.size()) {
      throw std::out_of_range("PiecewiseLinear: segment index out of range");
    }
    return vertices[i + 1].v > vertices[i].v ? 1 : -1;
  }

  // Exact value at abscissa q.  Throws domain_error left of the first
  // vertex and out_of_range past the last vertex of a truncated curve.
  LogCoord evaluate(const LogCoord& q) const {
    detail::require(!vertices.empty(), "PiecewiseLinear: empty curve");
    if (q < vertices.front().q) {
      throw std::domain_error(
          "PiecewiseLinear: abscissa left of the curve's start");
    }
    if (q > vertices.back().q) {
      if (!tail) {
        throw std::out_of_range(
            "PiecewiseLinear: abscissa past a truncated curve");
      }
      const LogCoord run = q - vertices.back().q;
      return tail->slope > 0 ? vertices.back().v + run
                             : vertices.back().v - run;
    }
    // Last vertex with abscissa <= q.
    const auto after =
        std::upper_bound(vertices.begin(), vertices.end(), q,
                         [](const LogCoord& lhs, const LogPoint& rhs) {
                           return lhs < rhs.q;
                         });
    const std::size_t i =
        static_cast<std::size_t>(after - vertices.begin()) - 1;
    if (vertices[i].q == q) return vertices[i].v;
    const LogCoord run = q - vertices[i].q;
    return segment_slope(i) > 0 ? vertices[i].v + run : vertices[i].v - run;
  }

  // Internal-consistency check: ordering, unit slopes, owner count, and
  // agreement between every segment and its owner's cost curve.
  void validate(const Rational& xi) const {
    detail::require(!vertices.empty(), "PiecewiseLinear: empty curve");
    detail::require(owners.size() + 1 == vertices.size(),
                    "PiecewiseLinear: owner count mismatch");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      detail::require(vertices[i].q < vertices[i + 1].q,
                      "PiecewiseLinear: abscissae not increasing");
      const LogCoord run = vertices[i + 1].q - vertices[i].q;
      const bool rises = vertices[i + 1].v == vertices[i].v + run;
      const bool falls = vertices[i + 1].v == vertices[i].v - run;
      detail::require(rises != falls, "PiecewiseLinear: segment slope not +-1");
      const Trajectory owner(owners[i], xi);
      detail::require(owner.evaluate(vertices[i].q) == vertices[i].v &&
                          owner.evaluate(vertices[i + 1].q) ==
                              vertices[i + 1].v,
                      "PiecewiseLinear: segment leaves its owner's curve");
    }
    if (tail) {
      detail::require(tail->slope == 1 || tail->slope == -1,
                      "PiecewiseLinear: tail slope not +-1");
      const Trajectory owner(tail->owner, xi);
      detail::require(owner.evaluate(vertices.back().q) == vertices.back().v,
                      "PiecewiseLinear: tail leaves its owner's curve");
    }
  }
};

// The two parametric-minima curves of one value xi in [0, 1/2], built over
// q >= 0: L1 is the cost of the cheapest nonzero lattice point, L2 the
// cheapest cost over points independent of an L1 witness.  q_maxima lists
// the abscissae of the local maxima of L1 (always starting at ratio 1),
// and interval_max_counts[k] counts the local maxima of L2 restricted to
// the closed interval [q_maxima[k], q_maxima[k+1]].  A graph is truncated
// when construction stopped before the final interval; its curves then end
// at the last built maximum and carry no tail rays.
struct CombinedGraph {
  Rational xi;  // normalized to [0, 1/2]
  PiecewiseLinear L1;
  PiecewiseLinear L2;
  std::vector<LogCoord> q_maxima;
  std::vector<BigInt> interval_max_counts;
  bool truncated = false;

  // Number of maxima of the full L1 curve; unknown when truncated.
  std::optional<std::size_t> s_detected() const {
    if (truncated) return std::nullopt;
    return q_maxima.size();
  }
};

namespace detail {

// Indices of the local maxima of `curve` restricted to vertex indices
// [lo, hi]: an interior vertex is a maximum when the value rises in and
// falls out; the left endpoint needs only the falling exit, the right
// endpoint only the rising entry.  Slopes outside the range — including a
// tail ray when hi is the last vertex — are deliberately invisible, so the
// count depends on the restriction alone.
inline std::vector<std::size_t> local_max_indices(const PiecewiseLinear& curve,
                                                  std::size_t lo,
                                                  std::size_t hi) {
  require(lo <= hi && hi < curve.vertices.size(),
          "local_max_indices: vertex range out of bounds");
  std::vector<std::size_t> maxima;
  for (std::size_t i = lo; i <= hi; ++i) {
    const bool rises_in = i == lo || curve.segment_slope(i - 1) > 0;
    const bool falls_out = i == hi || curve.segment_slope(i) < 0;
    if (rises_in && falls_out) maxima.push_back(i);
  }
  return maxima;
}

// Index of the vertex with abscissa exactly q; the curve must contain one.
inline std::size_t vertex_index_at(const PiecewiseLinear& curve,
                                   const LogCoord& q) {
  const auto it =
      std::lower_bound(curve.vertices.begin(), curve.vertices.end(), q,
                       [](const LogPoint& lhs, const LogCoord& rhs) {
                         return lhs.q < rhs;
                       });
  require(it != curve.vertices.end() && it->q == q,
          "vertex_index_at: no vertex at the requested abscissa");
  return static_cast<std::size_t>(it - curve.vertices.begin());
}

}  // namespace detail

// Builds the combined graph of xi (normalized internally), constructing at
// most `depth` intervals between consecutive L1 maxima.  The graph is
// complete — tails attached, all maxima present — when the value's interval
// count is at most depth; otherwise it is truncated after `depth` intervals.
inline CombinedGraph build_graph(const Rational& xi_raw, long long depth = 64) {
  if (depth < 1) {
    throw std::invalid_argument("build_graph: depth must be positive");
  }
  const Rational xi = normalize(xi_raw);
  const ConvergentTable table = convergents(xi);
  const long long s = static_cast<long long>(table.s());
  const long long built = std::min(s - 1, depth);

  CombinedGraph graph;
  graph.xi = xi;
  graph.truncated = built < s - 1;

  const LogPoint origin{LogCoord::zero(), LogCoord::zero()};
  graph.L1.vertices.push_back(origin);
  graph.L2.vertices.push_back(origin);

  const auto push = [](PiecewiseLinear& curve, const LogPoint& vertex,
                       const LatticePoint& owner) {
    detail::require(curve.vertices.back().q < vertex.q,
                    "build_graph: vertices out of order");
    curve.vertices.push_back(vertex);
    curve.owners.push_back(owner);
  };

  for (long long n = 1; n <= built; ++n) {
    const LatticePoint& prev = table.row(n - 1).x;
    const LatticePoint& curr = table.row(n).x;
    const Trajectory prev_curve(prev, xi);
    const LogPoint q_n = Trajectory::crossing(prev_curve, Trajectory(curr, xi));

    // L1 follows the cost curve of x_{n-1} across the whole interval:
    // down to its breakpoint, then up to the next maximum q_n.
    const std::optional<LogPoint> corner = prev_curve.breakpoint();
    detail::require(corner.has_value(),
                    "build_graph: interval owner lost a branch");
    push(graph.L1, *corner, prev);
    push(graph.L1, q_n, prev);

    // L2 is the lower envelope of the interval's mediant chain
    // x_{n,t} = x_{n-2} + t*x_{n-1}: consecutive curves cross once, and
    // each crossing is followed by the falling-to-rising corner of the new
    // owner, except that the final owner x_n keeps falling through q_n.
    const std::vector<Semiconvergent> chain = semiconvergents(table, n);
    Trajectory lower(chain.front().x, xi);
    for (std::size_t t = 1; t < chain.size(); ++t) {
      const Trajectory next(chain[t].x, xi);
      const LogPoint cross = Trajectory::crossing(lower, next);
      if (cross.q == graph.L2.vertices.back().q) {
        // First crossing of the first interval lands exactly on the
        // starting maximum; the vertex is already present.
        detail::require(cross.v == graph.L2.vertices.back().v,
                        "build_graph: inconsistent collapsed crossing");
      } else {
        push(graph.L2, cross, lower.point());
      }
      if (t + 1 < chain.size()) {
        const std::optional<LogPoint> dip = next.breakpoint();
        detail::require(dip.has_value(),
                        "build_graph: chain member lost a branch");
        push(graph.L2, *dip, next.point());
      }
      lower = next;
    }
    if (graph.L2.vertices.back().q == q_n.q) {
      // Final interval: the last crossing of the chain is the maximum
      // itself, where the two curves meet.
      detail::require(graph.L2.vertices.back().v == q_n.v,
                      "build_graph: curves disagree at the final maximum");
    } else {
      push(graph.L2, q_n, lower.point());
    }
  }

  if (!graph.truncated) {
    graph.L1.tail = Ray{-1, table.row(s - 1).x};
    graph.L2.tail = Ray{+1, table.row(s - 2).x};
  }
  graph.L1.validate(xi);
  graph.L2.validate(xi);

  const std::vector<std::size_t> max_idx = detail::local_max_indices(
      graph.L1, 0, graph.L1.vertices.size() - 1);
  graph.q_maxima.reserve(max_idx.size());
  for (std::size_t i : max_idx) {
    graph.q_maxima.push_back(graph.L1.vertices[i].q);
  }
  graph.interval_max_counts.reserve(graph.q_maxima.size() - 1);
  for (std::size_t k = 0; k + 1 < graph.q_maxima.size(); ++k) {
    const std::size_t lo = detail::vertex_index_at(graph.L2, graph.q_maxima[k]);
    const std::size_t hi =
        detail::vertex_index_at(graph.L2, graph.q_maxima[k + 1]);
    const std::vector<std::size_t> interior =
        detail::local_max_indices(graph.L2, lo, hi);
    graph.interval_max_counts.push_back(BigInt(interior.size()));
  }
  return graph;
}

// Local maxima of L2 restricted to the n-th interval [q_{n-1}, q_n] between
// consecutive L1 maxima, n = 1..interval count, as exact points.
inline std::vector<LogPoint> interval_local_maxima(const CombinedGraph& graph,
                                                   std::size_t n) {
  if (n < 1 || n + 1 > graph.q_maxima.size()) {
    throw std::invalid_argument(
        "interval_local_maxima: interval index out of range");
  }
  const std::size_t lo =
      detail::vertex_index_at(graph.L2, graph.q_maxima[n - 1]);
  const std::size_t hi = detail::vertex_index_at(graph.L2, graph.q_maxima[n]);
  std::vector<LogPoint> maxima;
  for (std::size_t i : detail::local_max_indices(graph.L2, lo, hi)) {
    maxima.push_back(graph.L2.vertices[i]);
  }
  return maxima;
}

// Result of reading a value back off a combined graph.  For a complete
// graph the quotients are the canonical expansion of the graph's value and
// `value` holds that value; for a truncated graph the quotients are a
// correct prefix of the expansion, partial is set, and value is absent.
struct DecodeResult {
  std::vector<BigInt> quotients;
  bool partial = false;
  std::optional<Rational> value;
};

// Reads the continued-fraction expansion off the graph geometry alone: the
// local maxima of L1 delimit the intervals, and the number of local maxima
// of L2 restricted to each interval is that interval's partial quotient.
inline DecodeResult decode(const CombinedGraph& graph) {
  DecodeResult result;
  result.partial = graph.truncated;
  const std::vector<std::size_t> max_idx = detail::local_max_indices(
      graph.L1, 0, graph.L1.vertices.size() - 1);
  for (std::size_t k = 0; k + 1 < max_idx.size(); ++k) {
    const std::size_t lo = detail::vertex_index_at(
        graph.L2, graph.L1.vertices[max_idx[k]].q);
    const std::size_t hi = detail::vertex_index_at(
        graph.L2, graph.L1.vertices[max_idx[k + 1]].q);
    const std::vector<std::size_t> interior =
        detail::local_max_indices(graph.L2, lo, hi);
    result.quotients.push_back(BigInt(interior.size()));
  }
  if (!graph.truncated) {
    detail::require(
        result.quotients.empty() || result.quotients.back() >= 2,
        "decode: complete graph produced a non-canonical expansion");
    result.value = result.quotients.empty() ? Rational(0)
                                            : quotients_value(result.quotients);
  }
  return result;
}

// Exact values (L1(q), L2(q)) of both curves at one abscissa.
inline std::pair<LogCoord, LogCoord> evaluate_graph(const CombinedGraph& graph,
                                                    const LogCoord& q) {
  return {graph.L1.evaluate(q), graph.L2.evaluate(q)};
}

}  // namespace cfpgn

#endif  // CFPGN_ENVELOPE_HPP_
