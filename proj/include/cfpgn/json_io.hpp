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
// JSON views of the library's value types.  Conventions: arbitrary-size
// integers and rationals are decimal strings ("14", "3/7") so no reader
// ever rounds them; a log coordinate carries its exact ratio as num/den
// strings plus a convenience double of the coordinate itself; key order is
// fixed (ordered_json), so equal values serialize to identical bytes.

#ifndef CFPGN_JSON_IO_HPP_
#define CFPGN_JSON_IO_HPP_

#include <cstddef>

#include <json.hpp>

#include "cfpgn/cf.hpp"
#include "cfpgn/envelope.hpp"
#include "cfpgn/lattice.hpp"
#include "cfpgn/logcoord.hpp"
#include "cfpgn/oracle.hpp"
#include "cfpgn/rational.hpp"
#include "cfpgn/verify.hpp"

namespace cfpgn {

using Json = nlohmann::ordered_json;

// Exact ratio plus the floating value of the coordinate 0.5*log(num/den).
inline Json json_of(const LogCoord& c) {
  const Rational& r = c.ratio();
  return Json{{"num", r.num().str()},
              {"den", r.den().str()},
              {"approx", c.value()}};
}

inline Json json_of(const LatticePoint& x) {
  return Json{{"Q", x.Q.str()}, {"P", x.P.str()}};
}

inline Json json_of(const CFExpansion& cf) {
  Json quotients = Json::array();
  for (const BigInt& a : cf.quotients) quotients.push_back(a.str());
  return Json{{"value", cf.value.str()}, {"quotients", std::move(quotients)}};
}

inline Json json_of(const ConvergentTable& table) {
  Json rows = Json::array();
  for (const ConvergentRow& row : table.rows()) {
    rows.push_back(Json{{"n", row.n},
                        {"Q", row.x.Q.str()},
                        {"P", row.x.P.str()},
                        {"delta", row.delta.str()}});
  }
  return Json{{"xi", table.xi().str()}, {"rows", std::move(rows)}};
}

inline Json json_of(const MinimaWitness& w) {
  return Json{{"lambda1", json_of(w.lambda1)},
              {"lambda2", json_of(w.lambda2)},
              {"w1", json_of(w.w1)},
              {"w2", json_of(w.w2)}};
}

namespace detail {

// A curve flattens to its vertices; each vertex names the owner of the
// piece starting there — the next segment, the tail ray at the end of a
// complete curve, or the incoming segment at the end of a truncated one.
inline Json json_of_curve(const PiecewiseLinear& curve) {
  require(curve.tail.has_value() || !curve.owners.empty(),
          "json_of_curve: truncated curve with no segments");
  Json out = Json::array();
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    const LatticePoint& owner =
        i < curve.owners.size()
            ? curve.owners[i]
            : (curve.tail ? curve.tail->owner : curve.owners.back());
    out.push_back(Json{{"q", json_of(curve.vertices[i].q)},
                       {"v", json_of(curve.vertices[i].v)},
                       {"owner", json_of(owner)}});
  }
  return out;
}

}  // namespace detail

inline Json json_of(const CombinedGraph& graph) {
  Json maxima = Json::array();
  for (const LogCoord& q : graph.q_maxima) maxima.push_back(json_of(q));
  Json counts = Json::array();
  for (const BigInt& a : graph.interval_max_counts) counts.push_back(a.str());
  return Json{{"xi", graph.xi.str()},
              {"L1", detail::json_of_curve(graph.L1)},
              {"L2", detail::json_of_curve(graph.L2)},
              {"q_maxima", std::move(maxima)},
              {"counts", std::move(counts)},
              {"truncated", graph.truncated}};
}

inline Json json_of(const CheckResult& check) {
  return Json{{"name", check.name},
              {"pass", check.pass},
              {"detail", check.detail}};
}

// Wall-clock time is deliberately not serialized: equal inputs must give
// byte-equal reports.
inline Json json_of(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back(json_of(check));
  }
  return Json{{"xi", report.xi.str()},
              {"seed", report.seed},
              {"pass", report.pass()},
              {"checks", std::move(checks)}};
}

inline Json json_of(const FuzzSummary& summary) {
  Json failures = Json::array();
  for (const Rational& xi : summary.failures) failures.push_back(xi.str());
  Json reports = Json::array();
  for (const VerifyReport& report : summary.reports) {
    reports.push_back(json_of(report));
  }
  return Json{{"max_den", summary.max_den.str()},
              {"count", summary.requested},
              {"seed", summary.seed},
              {"exhaustive", summary.exhaustive},
              {"pass", summary.pass()},
              {"failures", std::move(failures)},
              {"reports", std::move(reports)}};
}

}  // namespace cfpgn

#endif  // CFPGN_JSON_IO_HPP_
