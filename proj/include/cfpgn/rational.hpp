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

#ifndef CFPGN_RATIONAL_HPP_
#define CFPGN_RATIONAL_HPP_

#include <cassert>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfpgn {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Internal invariant check that survives NDEBUG: the envelope builder and the
// oracle rely on these to fail loudly instead of emitting wrong geometry.
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

// Natural log of |x| for x != 0, finite even when x overflows double:
// take the top 53 bits and add ln(2) per discarded bit.
inline double log_abs(const BigInt& x) {
  assert(!x.is_zero());
  BigInt a = boost::multiprecision::abs(x);
  double d = a.convert_to<double>();
  if (std::isfinite(d)) return std::log(d);
  const unsigned bits = boost::multiprecision::msb(a);
  BigInt top = a >> (bits - 52);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 52) * std::numbers::ln2;
}

}  // namespace detail

// Exact rational arithmetic over arbitrary-precision integers.
//
// Canonical form is maintained by every constructor and operator:
// gcd(num, den) == 1, den > 0, and zero is 0/1.  Everything downstream
// (errors |Q*xi - P|, half-log ratios, envelope ordinates) bottoms out in
// Rational comparisons, so this invariant is load-bearing for the whole
// library.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: integers embed
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    canonicalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational abs() const {
    return num_ < 0 ? Rational(unchecked, -num_, den_) : *this;
  }

  // Largest integer <= *this.  cpp_int division truncates toward zero, so
  // negative non-integers need one step down.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  Rational operator-() const { return Rational(unchecked, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  // Denominators are positive, so cross-multiplication preserves order.
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Accepts "p/q" (sign on p only, q != 0), an integer literal, or a finite
  // decimal literal like "-3.25".  There is deliberately no syntax for
  // repeating decimals; anything else is malformed.
  static Rational parse(std::string_view text);

  // "p/q", or just "p" when the denominator is 1.  parse() round-trips both.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  double to_double() const {
    const double n = num_.convert_to<double>();
    const double d = den_.convert_to<double>();
    if (std::isfinite(n) && std::isfinite(d)) return n / d;
    if (num_.is_zero()) return 0.0;
    return static_cast<double>(sign()) *
           std::exp(detail::log_abs(num_) - detail::log_abs(den_));
  }

 private:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};
  // Already-canonical fast path for abs/negate.
  Rational(unchecked_t, BigInt n, BigInt d)
      : num_(std::move(n)), den_(std::move(d)) {}

  void canonicalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
  const auto malformed = [&]() -> std::invalid_argument {
    return std::invalid_argument("Rational: malformed text \"" +
                                 std::string(text) + "\"");
  };
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto take_digits = [&](std::string_view& s) -> std::string {
    size_t i = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    std::string out(s.substr(0, i));
    s.remove_prefix(i);
    return out;
  };
  const std::string intpart = take_digits(rest);
  if (intpart.empty()) throw malformed();

  BigInt num(intpart);
  BigInt den(1);
  if (!rest.empty() && rest.front() == '/') {
    rest.remove_prefix(1);
    const std::string denom = take_digits(rest);
    if (denom.empty() || !rest.empty()) throw malformed();
    den = BigInt(denom);
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  } else if (!rest.empty() && rest.front() == '.') {
    rest.remove_prefix(1);
    const std::string frac = take_digits(rest);
    if (frac.empty() || !rest.empty()) throw malformed();
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = num * den + BigInt(frac);
  } else if (!rest.empty()) {
    throw malformed();
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace cfpgn

#endif  // CFPGN_RATIONAL_HPP_
