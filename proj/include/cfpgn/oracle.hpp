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

#ifndef CFPGN_ORACLE_HPP_
#define CFPGN_ORACLE_HPP_

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfpgn/cf.hpp"
#include "cfpgn/lattice.hpp"
#include "cfpgn/logcoord.hpp"
#include "cfpgn/rational.hpp"

// Brute-force trust anchor.  Everything here recomputes the two successive
// minima of the box {|x| <= e^q, |x*xi - y| <= e^{-q}} by direct lattice
// enumeration, on purpose sharing no code with the envelope builder: the
// cost formula below is re-derived from the body's definition rather than
// pulled from trajectory.hpp, so an algebra bug cannot cancel itself out
// when the two sides are compared.

namespace cfpgn {

// max(log|Q| - q, log|Q*xi - P| + q) in half-log form: the falling part has
// ratio Q^2/r_q, the rising part (Q*xi - P)^2 * r_q.
inline LogCoord point_cost(const LatticePoint& x, const Rational& xi,
                           const LogCoord& q) {
  if (x.is_zero()) throw std::domain_error("point_cost: zero lattice point");
  const Rational err = approximation_error(x, xi);
  std::optional<LogCoord> best;
  if (!x.Q.is_zero()) best = LogCoord(Rational(x.Q * x.Q) / q.ratio());
  if (!err.is_zero()) {
    LogCoord rising(err * err * q.ratio());
    if (!best || rising > *best) best = std::move(rising);
  }
  return *best;
}

// The two minima with witnesses.  Invariants: w1, w2 independent and
// lambda1 <= lambda2; witnesses are normalized to Q >= 0 (and (0, P) to
// (0, 1)), the lexicographically smallest (|Q|, |P|) among ties.
struct MinimaWitness {
  LogCoord lambda1;
  LogCoord lambda2;
  LatticePoint w1;
  LatticePoint w2;
};

namespace detail {

// Tie order for witnesses: (|Q|, |P|), then sign, over Q >= 0 candidates.
inline bool witness_before(const LatticePoint& a, const LatticePoint& b) {
  if (a.Q != b.Q) return a.Q < b.Q;
  const BigInt pa = boost::multiprecision::abs(a.P);
  const BigInt pb = boost::multiprecision::abs(b.P);
  if (pa != pb) return pa < pb;
  return a.P < b.P;
}

struct CostedPoint {
  LatticePoint x;
  LogCoord cost;
};

inline bool costed_before(const CostedPoint& a, const CostedPoint& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return witness_before(a.x, b.x);
}

}  // namespace detail

// Enumerates every lattice point whose cost could be <= bound and ranks
// them.  A point outside the enumerated box provably costs more than
// `bound`: its falling part needs Q^2 <= r_bound*r_q, its rising part
// (Q*xi - P)^2 <= r_bound/r_q, and the box covers both with margin.
// Returns nothing when the box holds no two independent points, which can
// only happen for a bound below the true lambda_2.
inline std::optional<MinimaWitness> brute_minima_bounded(const Rational& xi,
                                                         const LogCoord& q,
                                                         const LogCoord& bound) {
  namespace mp = boost::multiprecision;
  const Rational& r_q = q.ratio();
  const Rational& r_b = bound.ratio();

  const BigInt q_max = mp::sqrt((r_b * r_q).floor());
  // Half-width of the P window around Q*xi: covers |Q*xi - P| up to
  // sqrt(r_b/r_q), and is exactly 1 in the usual case bound <= q.
  const BigInt width = mp::sqrt((r_b / r_q).floor()) + 1;

  std::vector<detail::CostedPoint> points;
  points.reserve(
      std::min<size_t>(1u << 20, 8 + q_max.convert_to<double>() * 4));
  points.push_back({{BigInt(0), BigInt(1)},
                    point_cost({BigInt(0), BigInt(1)}, xi, q)});
  for (BigInt big_q = 1; big_q <= q_max; ++big_q) {
    const BigInt mid = (Rational(big_q) * xi).floor();
    for (BigInt p = mid - width; p <= mid + width + 1; ++p) {
      LatticePoint x{big_q, p};
      LogCoord cost = point_cost(x, xi, q);
      points.push_back({std::move(x), std::move(cost)});
    }
  }

  const detail::CostedPoint* first = &points.front();
  for (const auto& cand : points) {
    if (detail::costed_before(cand, *first)) first = &cand;
  }
  const detail::CostedPoint* second = nullptr;
  for (const auto& cand : points) {
    if (!independent(cand.x, first->x)) continue;
    if (second == nullptr || detail::costed_before(cand, *second)) {
      second = &cand;
    }
  }
  if (second == nullptr) return std::nullopt;
  return MinimaWitness{first->cost, second->cost, first->x, second->x};
}

// Exact lambda_1, lambda_2 of the body at parameter q (ratio e^{2q}), found
// by bounded enumeration.  The bound comes from ranking a seed set — the
// convergents, the semiconvergents with small Q, and the two unit points —
// and taking the cheapest independent pair; the optional hint (a claimed
// upper bound for lambda_2, e.g. from the envelope under test) may shrink
// the box but is never trusted: if the hinted box cannot confirm a
// lambda_2 within the hint, the search falls back to the seed bound.
inline MinimaWitness brute_minima(const Rational& xi_raw, const LogCoord& q,
                                  const std::optional<LogCoord>& hint = {}) {
  if (q.ratio() < Rational(1)) {
    throw std::domain_error("brute_minima: q must be >= 0");
  }
  const Rational xi = normalize(xi_raw);
  const ConvergentTable table = convergents(xi);

  std::vector<detail::CostedPoint> seeds;
  for (const ConvergentRow& row : table.rows()) {
    seeds.push_back({row.x, point_cost(row.x, xi, q)});
  }
  const Rational q_cutoff = q.ratio() * 2;
  for (long long n = 1; n < static_cast<long long>(table.s()); ++n) {
    for (const Semiconvergent& sc : semiconvergents(table, n)) {
      if (sc.t.is_zero() || sc.t == table.quotient(n)) continue;  // convergents
      if (Rational(sc.x.Q) > q_cutoff) break;
      seeds.push_back({sc.x, point_cost(sc.x, xi, q)});
    }
  }
  std::sort(seeds.begin(), seeds.end(), detail::costed_before);
  const detail::CostedPoint& best = seeds.front();
  const auto partner =
      std::find_if(seeds.begin(), seeds.end(), [&](const detail::CostedPoint& s) {
        return independent(s.x, best.x);
      });
  // (0,1) and (1,0) are both seeds, so an independent partner always exists,
  // and lambda_2 <= max of the pair's costs = the partner's cost.
  detail::require(partner != seeds.end(), "brute_minima: degenerate seed set");
  const LogCoord lambda_up = partner->cost;

  if (hint && *hint < lambda_up) {
    auto result = brute_minima_bounded(xi, q, *hint);
    if (result && result->lambda2 <= *hint) return *result;
    // The hint undershot the true lambda_2; certify against the seed bound.
  }
  auto result = brute_minima_bounded(xi, q, lambda_up);
  detail::require(result.has_value() && result->lambda2 <= lambda_up,
                  "brute_minima: seed bound failed to certify");
  detail::require(result->lambda1 <= result->lambda2 &&
                      independent(result->w1, result->w2),
                  "brute_minima: witness invariants violated");
  return *result;
}

// Exhaustive scan of one denominator window: the non-negative pairs (Q, P)
// with Q_{n-2} <= Q <= Q_n, |Q*xi - P| <= delta_{n-2}, and determinant
// against x_{n-1} nonzero must be exactly the semiconvergents x_{n,t},
// t = 0..a_n -- with one boundary exception.  Writing a candidate as
// r*x_{n-2} + t*x_{n-1}, the window forces r = 1 unless both slack terms
// vanish: t*delta_{n-1} >= (r-1)*delta_{n-2} (error bound) and
// (r-1)*Q_{n-2} <= (a_n-t)*Q_{n-1} (denominator bound) admit r = 2 only
// when delta_n = 0 and Q_{n-2} = 0 hold at once, i.e. n = 1 and s = 2
// (xi = 1/a).  Then t = a_1 is forced and the single extra solution is
// x_{-1} + x_1 = (a_1, 2), sitting exactly on the error boundary
// |Q*xi - P| = delta_{-1} = 1.  The scan asserts that corrected set.
struct WindowScanReport {
  bool pass = true;
  std::string first_violation;       // empty when pass
  std::vector<LatticePoint> found;   // scan result, sorted by (Q, P)
};

inline WindowScanReport check_semiconvergent_window(const ConvergentTable& table,
                                                    long long n) {
  const std::vector<Semiconvergent> semis = semiconvergents(table, n);
  const LatticePoint& prev1 = table.row(n - 1).x;
  const Rational& delta2 = table.row(n - 2).delta;
  const Rational& xi = table.xi();

  WindowScanReport report;
  for (BigInt big_q = table.row(n - 2).x.Q; big_q <= table.row(n).x.Q;
       ++big_q) {
    // Integer P with |Q*xi - P| <= delta_{n-2}: the closed interval
    // [Q*xi - d, Q*xi + d] clipped to P >= 0.
    const Rational center = Rational(big_q) * xi;
    BigInt p_lo = -((delta2 - center).floor());  // ceil(center - delta2)
    const BigInt p_hi = (center + delta2).floor();
    if (p_lo < 0) p_lo = 0;
    for (BigInt p = p_lo; p <= p_hi; ++p) {
      const LatticePoint x{big_q, p};
      if (x.is_zero()) continue;
      if (!independent(x, prev1)) continue;
      report.found.push_back(x);
    }
  }
  std::sort(report.found.begin(), report.found.end());

  std::vector<LatticePoint> expected;
  expected.reserve(semis.size() + 1);
  for (const Semiconvergent& sc : semis) expected.push_back(sc.x);
  if (n == 1 && table.s() == 2) {
    const LatticePoint& prev2 = table.row(n - 2).x;
    const LatticePoint& curr = table.row(n).x;
    expected.push_back(LatticePoint{prev2.Q + curr.Q, prev2.P + curr.P});
  }
  std::sort(expected.begin(), expected.end());
  if (report.found != expected) {
    report.pass = false;
    for (const LatticePoint& x : report.found) {
      if (std::find(expected.begin(), expected.end(), x) == expected.end()) {
        report.first_violation = "window point " + x.str() +
                                 " is not an expected point of interval " +
                                 std::to_string(n);
        return report;
      }
    }
    for (const LatticePoint& x : expected) {
      if (std::find(report.found.begin(), report.found.end(), x) ==
          report.found.end()) {
        report.first_violation = "semiconvergent " + x.str() +
                                 " missing from the window of interval " +
                                 std::to_string(n);
        return report;
      }
    }
  }
  return report;
}

inline WindowScanReport check_semiconvergent_window(const Rational& xi,
                                                    long long n) {
  return check_semiconvergent_window(convergents(normalize(xi)), n);
}

// Exhaustive certification that no nonzero point beats the final error
// level: |Q*xi - P| < delta_{s-2} together with independence from x_{s-1}
// has no solution.  The theory guarantees emptiness for all Q; the bounded
// scan certifies the implementation.  Negative Q is covered by symmetry
// (|Q*xi - P| and the determinant are invariant under negating the point).
struct EmptinessReport {
  bool pass = true;
  std::optional<LatticePoint> counterexample;
  BigInt scanned_bound;
};

inline EmptinessReport check_no_better_point(const ConvergentTable& table,
                                             const BigInt& q_bound) {
  const long long s = static_cast<long long>(table.s());
  const LatticePoint& last = table.row(s - 1).x;
  if (q_bound < last.Q) {
    throw std::invalid_argument(
        "check_no_better_point: bound below the final denominator");
  }
  const Rational& delta = table.row(s - 2).delta;
  const Rational& xi = table.xi();

  EmptinessReport report;
  report.scanned_bound = q_bound;
  for (BigInt big_q = 0; big_q <= q_bound; ++big_q) {
    // |Q*xi - P| < delta <= 1, so only the two integers nearest Q*xi can
    // qualify.
    const BigInt mid = (Rational(big_q) * xi).floor();
    for (const BigInt& p : {mid, BigInt(mid + 1)}) {
      const LatticePoint x{big_q, p};
      if (x.is_zero()) continue;
      if (approximation_error(x, xi) >= delta) continue;
      if (!independent(x, last)) continue;
      report.pass = false;
      report.counterexample = x;
      return report;
    }
  }
  return report;
}

inline EmptinessReport check_no_better_point(const Rational& xi,
                                             const BigInt& q_bound) {
  return check_no_better_point(convergents(normalize(xi)), q_bound);
}

}  // namespace cfpgn

#endif  // CFPGN_ORACLE_HPP_
