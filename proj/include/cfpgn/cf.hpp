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

#ifndef CFPGN_CF_HPP_
#define CFPGN_CF_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfpgn/lattice.hpp"
#include "cfpgn/rational.hpp"

namespace cfpgn {

// Continued fraction [0; a_1, ..., a_{s-1}] of a rational in [0, 1/2].
//
// Canonical form: quotients is empty exactly for value 0 (s = 1); otherwise
// a_1 >= 2 (forced by value <= 1/2) and the final quotient is >= 2, so every
// value has one expansion and expansions can be compared directly.
struct CFExpansion {
  Rational value;
  std::vector<BigInt> quotients;  // a_1 .. a_{s-1}

  size_t s() const { return quotients.size() + 1; }

  friend bool operator==(const CFExpansion& a, const CFExpansion& b) {
    return a.value == b.value && a.quotients == b.quotients;
  }

  // "[0]" or "[0;a_1,...,a_{s-1}]".
  std::string str() const {
    std::string out = "[0";
    for (size_t i = 0; i < quotients.size(); ++i) {
      out += (i == 0 ? ';' : ',');
      out += quotients[i].str();
    }
    out += ']';
    return out;
  }
};

// Distance from xi to its nearest integer; lands in [0, 1/2].  The graphs of
// the parametric minima only depend on xi through this value, so every entry
// point normalizes first.
inline Rational normalize(const Rational& xi) {
  const Rational frac = xi - Rational(xi.floor());
  return frac * 2 <= Rational(1) ? frac : Rational(1) - frac;
}

// Merges a trailing quotient 1 into its predecessor: [...; a, 1] and
// [...; a+1] denote the same value and the latter is canonical.  The
// Euclidean algorithm below never emits a trailing 1, but quotient lists
// arriving from outside (CLI --quotients) may.
inline std::vector<BigInt> canonicalize_quotients(std::vector<BigInt> q) {
  if (q.size() >= 2 && q.back() == 1) {
    q.pop_back();
    ++q.back();
  }
  return q;
}

// Exact value of [0; a_1, ..., a_k], evaluated back to front.
inline Rational quotients_value(const std::vector<BigInt>& quotients) {
  Rational x(0);
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
    if (*it <= 0) {
      throw std::domain_error("quotients_value: quotients must be positive");
    }
    x = Rational(1) / (Rational(*it) + x);
  }
  return x;
}

// Continued fraction of xi in [0, 1/2] by the Euclidean algorithm on the
// reduced numerator and denominator.
inline CFExpansion expand(const Rational& xi) {
  if (xi.sign() < 0 || xi * 2 > Rational(1)) {
    throw std::domain_error("expand: value outside [0, 1/2]");
  }
  CFExpansion cf;
  cf.value = xi;
  if (xi.is_zero()) return cf;
  // 1/xi = [a_1; a_2, ...]: divide den by num and continue on remainders.
  BigInt u = xi.den();
  BigInt v = xi.num();
  while (!v.is_zero()) {
    cf.quotients.push_back(u / v);
    BigInt r = u % v;
    u = std::move(v);
    v = std::move(r);
  }
  cf.quotients = canonicalize_quotients(std::move(cf.quotients));
  detail::require(cf.quotients.front() >= 2 && cf.quotients.back() >= 2,
                  "expand: canonical form violated");
  return cf;
}

// One row of the convergent table: x_n = (Q_n, P_n) and the exact error
// delta_n = |Q_n*xi - P_n|.
struct ConvergentRow {
  long long n;  // -1 .. s-1
  LatticePoint x;
  Rational delta;
};

// Convergents of xi, indexed n = -1, 0, ..., s-1, built by the standard
// recurrence x_n = x_{n-2} + a_n*x_{n-1} from x_{-1} = (0,1), x_0 = (1,0).
// delta_{s-1} is exactly zero; all earlier deltas are positive and strictly
// decreasing, with the Q_n strictly increasing from n = 0 on.
class ConvergentTable {
 public:
  ConvergentTable(Rational xi, std::vector<BigInt> quotients,
                  std::vector<ConvergentRow> rows)
      : xi_(std::move(xi)),
        quotients_(std::move(quotients)),
        rows_(std::move(rows)) {}

  const Rational& xi() const { return xi_; }
  size_t s() const { return quotients_.size() + 1; }

  // n in [-1, s-1].
  const ConvergentRow& row(long long n) const {
    if (n < -1 || n + 1 >= static_cast<long long>(rows_.size())) {
      throw std::out_of_range("ConvergentTable: row index out of range");
    }
    return rows_[static_cast<size_t>(n + 1)];
  }

  // a_n for n in [1, s-1].
  const BigInt& quotient(long long n) const {
    if (n < 1 || n > static_cast<long long>(quotients_.size())) {
      throw std::out_of_range("ConvergentTable: quotient index out of range");
    }
    return quotients_[static_cast<size_t>(n - 1)];
  }

  // Upper end of the denominator window [Q_{n-1}, Q_n): Q_n for n < s and
  // unbounded (no value) for n == s, where the sequence stops.
  std::optional<BigInt> denominator_bound(long long n) const {
    if (n < 0 || n > static_cast<long long>(s())) {
      throw std::out_of_range("ConvergentTable: bound index out of range");
    }
    if (n == static_cast<long long>(s())) return std::nullopt;
    return row(n).x.Q;
  }

  const std::vector<ConvergentRow>& rows() const { return rows_; }

 private:
  Rational xi_;
  std::vector<BigInt> quotients_;
  std::vector<ConvergentRow> rows_;
};

inline ConvergentTable convergents(const CFExpansion& cf) {
  std::vector<ConvergentRow> rows;
  rows.reserve(cf.quotients.size() + 2);
  rows.push_back({-1, {BigInt(0), BigInt(1)}, Rational(1)});
  rows.push_back({0, {BigInt(1), BigInt(0)}, cf.value});
  for (size_t i = 0; i < cf.quotients.size(); ++i) {
    const BigInt& a = cf.quotients[i];
    const LatticePoint& b2 = rows[rows.size() - 2].x;
    const LatticePoint& b1 = rows[rows.size() - 1].x;
    LatticePoint x{b2.Q + a * b1.Q, b2.P + a * b1.P};
    Rational delta = approximation_error(x, cf.value);
    rows.push_back({static_cast<long long>(i) + 1, std::move(x),
                    std::move(delta)});
  }
  detail::require(rows.back().delta.is_zero(),
                  "convergents: final error must vanish for rational input");
  return ConvergentTable(cf.value, cf.quotients, std::move(rows));
}

inline ConvergentTable convergents(const Rational& xi) {
  return convergents(expand(xi));
}

// Intermediate fraction x_{n,t} = x_{n-2} + t*x_{n-1} with its exact error.
// Because consecutive convergent errors carry opposite signs,
// delta_{n,t} = delta_{n-2} - t*delta_{n-1} for 0 <= t <= a_n, which is the
// identity the chain checker exercises.
struct Semiconvergent {
  BigInt t;
  LatticePoint x;
  Rational delta;
};

// All x_{n,t} for t = 0..a_n; pre: 1 <= n <= s-1.
inline std::vector<Semiconvergent> semiconvergents(const ConvergentTable& table,
                                                   long long n) {
  if (n < 1 || n >= static_cast<long long>(table.s())) {
    throw std::out_of_range("semiconvergents: index out of range");
  }
  const LatticePoint& base = table.row(n - 2).x;
  const LatticePoint& step = table.row(n - 1).x;
  const BigInt& a = table.quotient(n);
  std::vector<Semiconvergent> out;
  for (BigInt t = 0; t <= a; ++t) {
    LatticePoint x{base.Q + t * step.Q, base.P + t * step.P};
    Rational delta = approximation_error(x, table.xi());
    out.push_back({t, std::move(x), std::move(delta)});
  }
  return out;
}

// Result of checking the two interleaving chains
//   Q_{n,0} < Q_{n-1} <= Q_{n,1} < Q_{n,2} < ... < Q_{n,a_n}
//   delta_n < delta_{n-1} <= delta_{n,a_n-1} < ... < delta_{n,0}
// together with their endpoint identities.  The two non-strict spots are
// equalities in exactly one position each: Q_{n,1} == Q_{n-1} iff n == 1,
// and delta_{n,a_n-1} == delta_{n-1} iff n == s-1 (rational input).
struct ChainReport {
  bool pass = true;
  std::string first_violation;  // empty when pass
  bool q_equality = false;      // Q_{n,1} == Q_{n-1}
  bool delta_equality = false;  // delta_{n,a_n-1} == delta_{n-1}
};

inline ChainReport check_semiconvergent_chains(const ConvergentTable& table,
                                               long long n) {
  const std::vector<Semiconvergent> semis = semiconvergents(table, n);
  const ConvergentRow& prev2 = table.row(n - 2);
  const ConvergentRow& prev1 = table.row(n - 1);
  const ConvergentRow& cur = table.row(n);
  ChainReport report;
  const auto fail = [&](std::string what) {
    if (report.pass) {
      report.pass = false;
      report.first_violation = std::move(what);
    }
  };

  const size_t last = semis.size() - 1;  // index of t == a_n
  if (semis.front().x != prev2.x) fail("x[n,0] != x[n-2]");
  if (semis.back().x != cur.x) fail("x[n,a_n] != x[n]");
  if (semis.front().x.Q >= prev1.x.Q) fail("Q[n,0] < Q[n-1]");
  if (prev1.x.Q > semis[1].x.Q) fail("Q[n-1] <= Q[n,1]");
  for (size_t t = 1; t < last; ++t) {
    if (semis[t].x.Q >= semis[t + 1].x.Q) fail("Q[n,t] < Q[n,t+1]");
  }
  if (cur.delta >= prev1.delta) fail("delta[n] < delta[n-1]");
  if (prev1.delta > semis[last - 1].delta) {
    fail("delta[n-1] <= delta[n,a_n-1]");
  }
  for (size_t t = 0; t + 1 < last; ++t) {
    if (semis[t + 1].delta >= semis[t].delta) {
      fail("delta[n,t+1] < delta[n,t]");
    }
  }
  for (const Semiconvergent& sc : semis) {
    // The signed errors alternate, so the linear form stays exact.
    if (sc.delta != (prev2.delta - Rational(sc.t) * prev1.delta)) {
      fail("delta[n,t] == delta[n-2] - t*delta[n-1]");
    }
  }
  report.q_equality = prev1.x.Q == semis[1].x.Q;
  report.delta_equality = prev1.delta == semis[last - 1].delta;
  return report;
}

}  // namespace cfpgn

#endif  // CFPGN_CF_HPP_
