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

#ifndef CFPGN_LOGCOORD_HPP_
#define CFPGN_LOGCOORD_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "cfpgn/rational.hpp"

namespace cfpgn {

// Exact coordinate on a logarithmic axis: a positive rational r stands for
// the real number (1/2)*ln(r).
//
// Why half-logs: every quantity the minima graph needs is of the form
// log|Q| (ratio Q^2), log|Q*xi - P| (ratio (Q*xi - P)^2), or the parameter q
// with e^{2q} rational at all interesting abscissae.  Squaring clears the
// sign and keeps breakpoints, crossings, and slopes of the +-1 segments
// closed under ratio multiplication, so comparisons stay exact integer
// cross-multiplications and addition is a ratio product.  Floating point is
// only ever an output format.
class LogCoord {
 public:
  explicit LogCoord(Rational ratio) : ratio_(std::move(ratio)) {
    if (ratio_.sign() <= 0) {
      throw std::domain_error("LogCoord: ratio must be positive");
    }
  }

  static LogCoord zero() { return LogCoord(Rational(1)); }

  const Rational& ratio() const { return ratio_; }
  bool is_zero() const { return ratio_.is_integer() && ratio_.num() == 1; }

  // (1/2)*ln(ratio), via bit-length when the integers overflow double.
  double value() const {
    return 0.5 * (detail::log_abs(ratio_.num()) - detail::log_abs(ratio_.den()));
  }

  // Real-number addition is ratio multiplication; ratio 1 is the neutral 0.
  friend LogCoord operator+(const LogCoord& a, const LogCoord& b) {
    return LogCoord(a.ratio_ * b.ratio_);
  }
  friend LogCoord operator-(const LogCoord& a, const LogCoord& b) {
    return LogCoord(a.ratio_ / b.ratio_);
  }
  LogCoord operator-() const { return LogCoord(Rational(1) / ratio_); }

  friend bool operator==(const LogCoord& a, const LogCoord& b) {
    return a.ratio_ == b.ratio_;
  }
  friend std::strong_ordering operator<=>(const LogCoord& a,
                                          const LogCoord& b) {
    return a.ratio_ <=> b.ratio_;
  }

  std::string str() const { return "0.5*log(" + ratio_.str() + ")"; }

 private:
  Rational ratio_;
};

}  // namespace cfpgn

#endif  // CFPGN_LOGCOORD_HPP_
