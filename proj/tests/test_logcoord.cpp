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

#include "cfpgn/logcoord.hpp"

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

namespace cfpgn {
namespace {

Rational ratio(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

TEST_CASE("ratio must be positive") {
  REQUIRE_THROWS_AS(LogCoord(Rational(0)), std::domain_error);
  REQUIRE_THROWS_AS(LogCoord(Rational(-4)), std::domain_error);
  REQUIRE_NOTHROW(LogCoord(ratio(1, 1000000)));
}

TEST_CASE("zero is ratio one") {
  REQUIRE(LogCoord::zero().ratio() == Rational(1));
  REQUIRE(LogCoord::zero().is_zero());
  REQUIRE(LogCoord::zero().value() == 0.0);
  REQUIRE_FALSE(LogCoord(Rational(2)).is_zero());
}

TEST_CASE("value is half the natural log of the ratio") {
  REQUIRE(LogCoord(Rational(4)).value() == Catch::Approx(std::log(2.0)));
  REQUIRE(LogCoord(ratio(1, 4)).value() == Catch::Approx(-std::log(2.0)));
  REQUIRE(LogCoord(ratio(49, 9)).value() ==
          Catch::Approx(0.5 * std::log(49.0 / 9.0)));
}

TEST_CASE("addition multiplies ratios and subtraction divides them") {
  const LogCoord a(Rational(4));
  const LogCoord b(ratio(9, 4));
  REQUIRE((a + b).ratio() == Rational(9));
  REQUIRE((a - b).ratio() == ratio(16, 9));
  REQUIRE((a + LogCoord::zero()) == a);
  REQUIRE((a - a).is_zero());
  REQUIRE((-a).ratio() == ratio(1, 4));
  REQUIRE((-a + a).is_zero());
}

TEST_CASE("ordering follows the ratio") {
  REQUIRE(LogCoord(ratio(1, 2)) < LogCoord::zero());
  REQUIRE(LogCoord(Rational(2)) > LogCoord::zero());
  REQUIRE(LogCoord(ratio(14, 3)) < LogCoord(Rational(5)));
  REQUIRE(LogCoord(Rational(4)) == LogCoord(ratio(8, 2)));
}

TEST_CASE("value stays finite for ratios outside double range") {
  BigInt huge(1);
  huge <<= 3000;
  REQUIRE(LogCoord(Rational(huge)).value() ==
          Catch::Approx(1500 * std::numbers::ln2).epsilon(1e-12));
  REQUIRE(LogCoord(Rational(BigInt(1), huge)).value() ==
          Catch::Approx(-1500 * std::numbers::ln2).epsilon(1e-12));
}

TEST_CASE("str names the encoding") {
  REQUIRE(LogCoord(ratio(14, 3)).str() == "0.5*log(14/3)");
}

}  // namespace
}  // namespace cfpgn
