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

#ifndef CFPGN_VERIFY_HPP_
#define CFPGN_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cfpgn/cf.hpp"
#include "cfpgn/envelope.hpp"
#include "cfpgn/lattice.hpp"
#include "cfpgn/logcoord.hpp"
#include "cfpgn/oracle.hpp"
#include "cfpgn/rational.hpp"

namespace cfpgn {

// Outcome of one named consistency check.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure description, or a short pass summary
};

// Full verification record for one value.
struct VerifyReport {
  Rational xi;  // normalized to [0, 1/2]
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;  // wall time; excluded from serialization

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
};

namespace detail {

// Abscissae worth probing on a graph: every vertex of both curves, a point
// strictly inside each gap between consecutive distinct abscissae, two
// points along the tails when complete, and `extra` seeded pseudo-random
// abscissae between ratio 1 and four times the final vertex.  The extras
// are drawn from the raw mt19937_64 stream, so a fixed seed fixes the set.
inline std::vector<LogCoord> graph_samples(const CombinedGraph& graph,
                                           std::size_t extra,
                                           std::uint64_t seed) {
  std::vector<LogCoord> qs;
  for (const LogPoint& v : graph.L1.vertices) qs.push_back(v.q);
  for (const LogPoint& v : graph.L2.vertices) qs.push_back(v.q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  std::vector<LogCoord> samples = qs;
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
    const Rational a = qs[i].ratio();
    const Rational b = qs[i + 1].ratio();
    samples.push_back(LogCoord(Rational(a.num() + b.num(), a.den() + b.den())));
  }
  const Rational last = qs.back().ratio();
  if (!graph.truncated) {
    samples.push_back(LogCoord(last * Rational(2)));
    samples.push_back(LogCoord(last * Rational(4)));
  }
  if (extra > 0) {
    std::mt19937_64 rng(seed);
    const Rational hi = graph.truncated ? last : last * Rational(4);
    const Rational span = hi - Rational(1);
    const BigInt denom = BigInt(1) << 53;
    for (std::size_t i = 0; i < extra; ++i) {
      const BigInt k(rng() >> 11);  // 53 uniform bits
      samples.push_back(LogCoord(Rational(1) + span * Rational(k, denom)));
    }
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

}  // namespace detail

// Runs every consistency check on one value: continued-fraction facts,
// window and emptiness scans, and exact agreement between the combined
// graph and the brute-force oracle at all sampled abscissae (plus `samples`
// extra seeded ones).  `oracle_bound` overrides the denominator bound of
// the emptiness scan, which defaults to ten times the final denominator.
inline VerifyReport verify_one(const Rational& xi_raw, std::size_t samples = 0,
                               const std::optional<BigInt>& oracle_bound = {},
                               std::uint64_t seed = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.xi = normalize(xi_raw);
  report.seed = seed;
  const Rational& xi = report.xi;

  const CFExpansion cf = expand(xi);
  const ConvergentTable table = convergents(cf);
  const long long s = static_cast<long long>(table.s());
  const CombinedGraph graph = build_graph(xi, std::max<long long>(s - 1, 1));
  const std::vector<LogCoord> probe =
      detail::graph_samples(graph, samples, seed);

  const auto add = [&report](std::string name, bool pass, std::string detail) {
    report.checks.push_back(
        CheckResult{std::move(name), pass, std::move(detail)});
  };

  // The expansion reproduces the value and is canonical.
  {
    const bool ok = quotients_value(cf.quotients) == xi &&
                    (cf.quotients.empty() ||
                     (cf.quotients.front() >= 2 && cf.quotients.back() >= 2));
    add("cf_round_trip", ok,
        ok ? "quotients " + cf.str()
           : "expansion failed to reproduce " + xi.str());
  }

  // Denominators strictly increase from x_0 on.
  {
    bool ok = table.row(-1).x.Q.is_zero() && table.row(0).x.Q == 1;
    long long bad = -2;
    for (long long n = 0; ok && n + 1 < s; ++n) {
      if (!(table.row(n + 1).x.Q > table.row(n).x.Q)) {
        ok = false;
        bad = n;
      }
    }
    add("denominators_increasing", ok,
        ok ? "" : "Q_" + std::to_string(bad + 1) + " fails to grow");
  }

  // Signed errors alternate in sign while their magnitudes strictly
  // decrease; the final error vanishes (the value is rational).
  {
    bool ok = true;
    std::string why;
    Rational prev(-1);  // signed error of the seed row (0, 1)
    for (long long n = 0; n < s && ok; ++n) {
      const Rational e = Rational(table.row(n).x.Q) * xi -
                         Rational(table.row(n).x.P);
      if (e.abs() >= prev.abs()) {
        ok = false;
        why = "error magnitude fails to drop at n = " + std::to_string(n);
      } else if (n + 1 < s && e.sign() * prev.sign() != -1) {
        ok = false;
        why = "error sign fails to alternate at n = " + std::to_string(n);
      }
      prev = e;
    }
    if (ok && !prev.is_zero()) {
      ok = false;
      why = "final error is nonzero";
    }
    add("errors_alternate_decrease", ok, why);
  }

  // Consecutive convergents span a unimodular cell, with alternating sign.
  {
    bool ok = true;
    std::string why;
    for (long long n = 0; n < s && ok; ++n) {
      const BigInt d = det(table.row(n - 1).x, table.row(n).x);
      const BigInt want = (n % 2 == 0) ? BigInt(-1) : BigInt(1);
      if (d != want) {
        ok = false;
        why = "determinant at n = " + std::to_string(n) + " is " + d.str();
      }
    }
    add("unimodular_determinants", ok, why);
  }

  // Both recurrence chains of every interval close up exactly.
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n < s && ok; ++n) {
      const ChainReport chain = check_semiconvergent_chains(table, n);
      if (!chain.pass) {
        ok = false;
        why = chain.first_violation;
      } else if (chain.q_equality != (n == 1) ||
                 chain.delta_equality != (n == s - 1)) {
        ok = false;
        why = "chain endpoint degeneracies wrong at n = " + std::to_string(n);
      }
    }
    add("semiconvergent_chains", ok, why);
  }

  // The denominator window of each interval holds exactly the expected
  // points.
  {
    bool ok = true;
    std::string why;
    for (long long n = 1; n < s && ok; ++n) {
      const WindowScanReport scan = check_semiconvergent_window(table, n);
      if (!scan.pass) {
        ok = false;
        why = scan.first_violation;
      }
    }
    add("semiconvergent_window", ok, why);
  }

  // No nonzero point beats the final error level.
  {
    const BigInt bound =
        oracle_bound.value_or(table.row(s - 1).x.Q * 10);
    const EmptinessReport scan = check_no_better_point(table, bound);
    add("no_better_point", scan.pass,
        scan.pass ? "scanned |Q| <= " + scan.scanned_bound.str()
                  : "counterexample " + scan.counterexample->str());
  }

  // The graph and the brute-force oracle agree exactly everywhere sampled.
  {
    bool ok = true;
    std::string why;
    for (const LogCoord& q : probe) {
      const auto [low, high] = evaluate_graph(graph, q);
      const MinimaWitness w = brute_minima(xi, q, high);
      if (w.lambda1 != low || w.lambda2 != high) {
        ok = false;
        why = "oracle disagrees at q ratio " + q.ratio().str();
        break;
      }
    }
    add("oracle_envelope_equivalence", ok,
        ok ? "checked " + std::to_string(probe.size()) + " abscissae" : why);
  }

  // Every segment has slope +-1 and stays on its owner's cost curve.
  {
    bool ok = true;
    std::string why;
    try {
      graph.L1.validate(xi);
      graph.L2.validate(xi);
    } catch (const std::logic_error& e) {
      ok = false;
      why = e.what();
    }
    add("unit_slopes", ok, why);
  }

  // The product of the two minima stays inside the lattice-point band.
  {
    bool ok = true;
    std::string why;
    for (const LogCoord& q : probe) {
      const auto [low, high] = evaluate_graph(graph, q);
      const Rational product = (low + high).ratio();
      if (product > Rational(1) || product < Rational(BigInt(1), BigInt(4))) {
        ok = false;
        why = "product " + product.str() + " at q ratio " + q.ratio().str();
        break;
      }
    }
    add("minkowski_band", ok, why);
  }

  // The curves meet at every maximum of the lower one.
  {
    bool ok = true;
    std::string why;
    for (const LogCoord& q : graph.q_maxima) {
      if (graph.L1.evaluate(q) != graph.L2.evaluate(q)) {
        ok = false;
        why = "curves split at q ratio " + q.ratio().str();
        break;
      }
    }
    add("touch_at_maxima", ok, why);
  }

  // The lower curve never exceeds the upper one.
  {
    bool ok = true;
    std::string why;
    for (const LogCoord& q : probe) {
      const auto [low, high] = evaluate_graph(graph, q);
      if (low > high) {
        ok = false;
        why = "L1 above L2 at q ratio " + q.ratio().str();
        break;
      }
    }
    add("lower_envelope_below", ok, why);
  }

  // The maxima abscissae follow the closed form Q_n / delta_{n-1}.
  {
    bool ok = graph.q_maxima.size() == static_cast<std::size_t>(s) &&
              graph.q_maxima.front() == LogCoord::zero();
    std::string why = ok ? "" : "maximum count disagrees with the expansion";
    for (long long n = 1; n < s && ok; ++n) {
      const LogCoord want(Rational(table.row(n).x.Q) /
                          table.row(n - 1).delta);
      if (graph.q_maxima[static_cast<std::size_t>(n)] != want) {
        ok = false;
        why = "q_" + std::to_string(n) + " off the closed form";
      }
    }
    add("maxima_formula", ok, why);
  }

  // Reading the graph back recovers the value.
  {
    const DecodeResult result = decode(graph);
    const bool ok = !result.partial && result.quotients == cf.quotients &&
                    result.value == xi;
    add("decode_round_trip", ok,
        ok ? "decoded " + cf.str() : "graph decodes to the wrong expansion");
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

// Verification summary over a set of values with denominators <= max_den.
struct FuzzSummary {
  BigInt max_den;
  std::size_t requested = 0;  // distinct values asked for
  std::uint64_t seed = 0;
  bool exhaustive = false;    // every admissible value was covered
  std::vector<VerifyReport> reports;  // sorted by value
  std::vector<Rational> failures;     // values with a failing check

  bool pass() const { return failures.empty(); }
};

// Verifies `count` distinct values with denominator <= max_den, drawn
// uniformly (seeded, reproducible); when count meets or exceeds the number
// of admissible values the sweep becomes exhaustive instead.  Values are
// reduced fractions in [0, 1/2], and 0 counts as the sole denominator-1
// value.
inline FuzzSummary fuzz(const BigInt& max_den, std::size_t count = 100,
                        std::uint64_t seed = 0) {
  if (max_den < 1) {
    throw std::invalid_argument("fuzz: max_den must be at least 1");
  }
  if (max_den > BigInt(0xffffffffULL)) {
    throw std::invalid_argument("fuzz: max_den too large to enumerate");
  }
  FuzzSummary summary;
  summary.max_den = max_den;
  summary.requested = count;
  summary.seed = seed;

  // Population of reduced p/d with 0 <= 2p <= d <= max_den.
  std::vector<Rational> population;
  population.push_back(Rational(0));
  for (BigInt d = 2; d <= max_den; ++d) {
    for (BigInt p = 1; p * 2 <= d; ++p) {
      if (boost::multiprecision::gcd(p, d) == 1) {
        population.emplace_back(p, d);
      }
    }
  }

  std::vector<Rational> chosen;
  if (count >= population.size()) {
    summary.exhaustive = true;
    chosen = population;
  } else {
    std::mt19937_64 rng(seed);
    const unsigned long long den_span =
        max_den.convert_to<unsigned long long>();
    while (chosen.size() < count) {
      const BigInt d(rng() % den_span + 1);
      const BigInt p(rng() % ((d / 2 + 1).convert_to<unsigned long long>()));
      if (p * 2 > d) continue;
      if (boost::multiprecision::gcd(p, d) != 1) continue;
      const Rational xi = d == 1 ? Rational(0) : Rational(p, d);
      if (std::find(chosen.begin(), chosen.end(), xi) != chosen.end()) {
        continue;
      }
      chosen.push_back(xi);
    }
  }
  std::sort(chosen.begin(), chosen.end());

  for (const Rational& xi : chosen) {
    summary.reports.push_back(verify_one(xi, 0, std::nullopt, seed));
    if (!summary.reports.back().pass()) {
      summary.failures.push_back(xi);
    }
  }
  return summary;
}

}  // namespace cfpgn

#endif  // CFPGN_VERIFY_HPP_
