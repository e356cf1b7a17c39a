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

#ifndef CFPGN_LATTICE_HPP_
#define CFPGN_LATTICE_HPP_

#include <string>

#include "cfpgn/rational.hpp"

namespace cfpgn {

// A point (Q, P) of Z^2.  Its cost against the stretched box
// {|x| <= e^q, |x*xi - y| <= e^{-q}} is max(log|Q| - q, log|Q*xi - P| + q);
// that cost is invariant under negation, so most call sites normalize to
// Q >= 0.
struct LatticePoint {
  BigInt Q;
  BigInt P;

  bool is_zero() const { return Q.is_zero() && P.is_zero(); }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.Q == b.Q && a.P == b.P;
  }
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.Q != b.Q ? a.Q < b.Q : a.P < b.P;
  }

  std::string str() const { return "(" + Q.str() + ", " + P.str() + ")"; }
};

inline BigInt det(const LatticePoint& a, const LatticePoint& b) {
  return a.Q * b.P - a.P * b.Q;
}

inline bool independent(const LatticePoint& a, const LatticePoint& b) {
  return !det(a, b).is_zero();
}

// |Q*xi - P|, the exact distance from Q*xi to P.
inline Rational approximation_error(const LatticePoint& x,
                                    const Rational& xi) {
  return (Rational(x.Q) * xi - Rational(x.P)).abs();
}

}  // namespace cfpgn

#endif  // CFPGN_LATTICE_HPP_
