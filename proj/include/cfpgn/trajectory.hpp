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

#ifndef CFPGN_TRAJECTORY_HPP_
#define CFPGN_TRAJECTORY_HPP_

#include <optional>
#include <stdexcept>
#include <utility>

#include "cfpgn/lattice.hpp"
#include "cfpgn/logcoord.hpp"
#include "cfpgn/rational.hpp"

namespace cfpgn {

// A point on the (q, value) plane with both coordinates exact.
struct LogPoint {
  LogCoord q;
  LogCoord v;

  friend bool operator==(const LogPoint& a, const LogPoint& b) {
    return a.q == b.q && a.v == b.v;
  }
};

// Cost curve of a single lattice point x = (Q, P) against the parameter q:
//
//   L_x(q) = max(log|Q| - q, log|Q*xi - P| + q)
//
// i.e. a falling branch of slope -1 at level log|Q| and a rising branch of
// slope +1 at level log|Q*xi - P|.  A branch is absent when its level would
// be log 0: Q = 0 kills the falling branch, an exact multiple of xi kills
// the rising one; a nonzero point always keeps at least one.  L_x = L_{-x},
// so construction normalizes to Q >= 0 (and P > 0 when Q = 0).
//
// In half-log ratios: the falling level is Q^2, the rising level is
// (Q*xi - P)^2, and with q = (1/2)log(r_q) the branch values come out as
// Q^2/r_q and (Q*xi - P)^2*r_q — all rational, so the envelope never leaves
// exact arithmetic.
class Trajectory {
 public:
  Trajectory(LatticePoint x, Rational xi)
      : x_(std::move(x)), xi_(std::move(xi)) {
    if (x_.is_zero()) {
      throw std::domain_error("Trajectory: zero lattice point");
    }
    if (x_.Q < 0 || (x_.Q.is_zero() && x_.P < 0)) {
      x_.Q = -x_.Q;
      x_.P = -x_.P;
    }
    err_ = approximation_error(x_, xi_);
  }

  const LatticePoint& point() const { return x_; }
  const Rational& xi() const { return xi_; }
  // |Q*xi - P| as an exact rational (the rising level before taking logs).
  const Rational& error() const { return err_; }

  bool has_falling() const { return !x_.Q.is_zero(); }
  bool has_rising() const { return !err_.is_zero(); }

  // log|Q| as a half-log (ratio Q^2).
  LogCoord falling_level() const {
    if (!has_falling()) {
      throw std::domain_error("Trajectory: falling branch absent (Q = 0)");
    }
    return LogCoord(Rational(x_.Q * x_.Q));
  }

  // log|Q*xi - P| as a half-log (ratio (Q*xi - P)^2).
  LogCoord rising_level() const {
    if (!has_rising()) {
      throw std::domain_error("Trajectory: rising branch absent (error = 0)");
    }
    return LogCoord(err_ * err_);
  }

  // L_x(q); with at least one branch always present this is total.
  LogCoord evaluate(const LogCoord& q) const {
    std::optional<LogCoord> best;
    if (has_falling()) best = falling_level() - q;
    if (has_rising()) {
      LogCoord rising = rising_level() + q;
      if (!best || rising > *best) best = std::move(rising);
    }
    return *best;
  }

  // The V's corner, where falling meets rising: q ratio Q/|Q*xi - P|, value
  // ratio Q*|Q*xi - P| (both from log|Q| - q = log|Q*xi - P| + q).  Absent
  // for single-branch trajectories, which are straight rays.
  std::optional<LogPoint> breakpoint() const {
    if (!has_falling() || !has_rising()) return std::nullopt;
    const Rational big_q(x_.Q);
    return LogPoint{LogCoord(big_q / err_), LogCoord(big_q * err_)};
  }

  // Intersection of `rising`'s rising branch with `falling`'s falling
  // branch: log(err_r) + q = log(Q_f) - q gives q ratio Q_f/err_r and value
  // ratio Q_f*err_r.  Callers must pass branches that are active there,
  // i.e. the crossing must sit at or after both breakpoints; that reduces to
  // Q_f >= Q_r and err_f <= err_r, which is checked.
  static LogPoint crossing(const Trajectory& rising, const Trajectory& falling) {
    if (!rising.has_rising()) {
      throw std::domain_error("crossing: first argument has no rising branch");
    }
    if (!falling.has_falling()) {
      throw std::domain_error("crossing: second argument has no falling branch");
    }
    if (rising.has_falling() && falling.x_.Q < rising.x_.Q) {
      throw std::invalid_argument(
          "crossing: intersection precedes the rising trajectory's corner");
    }
    if (falling.has_rising() && falling.err_ > rising.err_) {
      throw std::invalid_argument(
          "crossing: intersection precedes the falling trajectory's corner");
    }
    const Rational big_q(falling.x_.Q);
    return LogPoint{LogCoord(big_q / rising.err_),
                    LogCoord(big_q * rising.err_)};
  }

  // True when L_this(q) >= L_other(q) for every q >= 0.  For two max-of-two-
  // lines shapes this has a closed form: each branch of `other` must be
  // covered either by the parallel branch's level or, for the falling line,
  // by this rising branch already beating it at q = 0.  A rising line can
  // never be covered by a falling one alone.
  bool dominates(const Trajectory& other) const {
    const bool covers_falling =
        !other.has_falling() ||
        (has_falling() && x_.Q >= other.x_.Q) ||
        (has_rising() && err_ >= Rational(other.x_.Q));
    const bool covers_rising =
        !other.has_rising() || (has_rising() && err_ >= other.err_);
    return covers_falling && covers_rising;
  }

 private:
  LatticePoint x_;
  Rational xi_;
  Rational err_;
};

}  // namespace cfpgn

#endif  // CFPGN_TRAJECTORY_HPP_
