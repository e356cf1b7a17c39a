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

#include "cfpgn/verify.hpp"

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <catch2/catch_amalgamated.hpp>

namespace cfpgn {
namespace {

Rational frac(long long n, long long d) {
  return Rational(BigInt(n), BigInt(d));
}

const std::vector<std::string> kCheckNames = {
    "cf_round_trip",       "denominators_increasing",
    "errors_alternate_decrease", "unimodular_determinants",
    "semiconvergent_chains",     "semiconvergent_window",
    "no_better_point",     "oracle_envelope_equivalence",
    "unit_slopes",         "minkowski_band",
    "touch_at_maxima",     "lower_envelope_below",
    "maxima_formula",      "decode_round_trip"};

TEST_CASE("a full report runs every check in order and passes") {
  const VerifyReport report = verify_one(frac(3, 7));
  REQUIRE(report.xi == frac(3, 7));
  REQUIRE(report.checks.size() == kCheckNames.size());
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
    INFO("check " << kCheckNames[i] << ": " << report.checks[i].detail);
    REQUIRE(report.checks[i].name == kCheckNames[i]);
    REQUIRE(report.checks[i].pass);
  }
  REQUIRE(report.pass());
  REQUIRE(report.elapsed_seconds >= 0.0);
}

TEST_CASE("verification normalizes its input") {
  REQUIRE(verify_one(frac(4, 7)).xi == frac(3, 7));
  REQUIRE(verify_one(frac(-3, 7)).xi == frac(3, 7));
  REQUIRE(verify_one(Rational(5)).xi == Rational(0));
}

TEST_CASE("edge values verify cleanly") {
  REQUIRE(verify_one(Rational(0)).pass());
  REQUIRE(verify_one(frac(1, 2)).pass());
  REQUIRE(verify_one(frac(1, 97)).pass());
  REQUIRE(verify_one(frac(21, 55)).pass());
}

TEST_CASE("extra sampled abscissae are seeded and deterministic") {
  const VerifyReport a = verify_one(frac(3, 7), 25, std::nullopt, 7);
  const VerifyReport b = verify_one(frac(3, 7), 25, std::nullopt, 7);
  REQUIRE(a.pass());
  REQUIRE(a.seed == 7);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    REQUIRE(a.checks[i].name == b.checks[i].name);
    REQUIRE(a.checks[i].pass == b.checks[i].pass);
    REQUIRE(a.checks[i].detail == b.checks[i].detail);
  }
  // More samples reach more abscissae than the bare vertex set.
  const VerifyReport bare = verify_one(frac(3, 7));
  REQUIRE(a.checks[7].name == "oracle_envelope_equivalence");
  REQUIRE(a.checks[7].detail > bare.checks[7].detail);
}

TEST_CASE("the emptiness bound can be widened but not undercut") {
  const VerifyReport wide = verify_one(frac(3, 7), 0, BigInt(250));
  REQUIRE(wide.pass());
  REQUIRE(wide.checks[6].name == "no_better_point");
  REQUIRE(wide.checks[6].detail == "scanned |Q| <= 250");
  REQUIRE_THROWS_AS(verify_one(frac(3, 7), 0, BigInt(3)),
                    std::invalid_argument);
}

TEST_CASE("every value of a small sweep verifies") {
  for (long long d = 1; d <= 15; ++d) {
    for (long long p = 0; 2 * p <= d; ++p) {
      if (p == 0 && d > 1) continue;
      if (boost::multiprecision::gcd(BigInt(p), BigInt(d)) != 1) continue;
      const VerifyReport report = verify_one(frac(p, d));
      INFO("xi = " << report.xi.str());
      for (const CheckResult& check : report.checks) {
        INFO(check.name << ": " << check.detail);
        REQUIRE(check.pass);
      }
    }
  }
}

TEST_CASE("a fuzz request covering the population turns exhaustive") {
  const FuzzSummary summary = fuzz(BigInt(8), 100, 1);
  REQUIRE(summary.exhaustive);
  REQUIRE(summary.pass());
  std::vector<Rational> values;
  for (const VerifyReport& r : summary.reports) values.push_back(r.xi);
  REQUIRE(values ==
          std::vector<Rational>{Rational(0), frac(1, 8), frac(1, 7),
                                frac(1, 6), frac(1, 5), frac(1, 4),
                                frac(2, 7), frac(1, 3), frac(3, 8),
                                frac(2, 5), frac(3, 7), frac(1, 2)});
}

TEST_CASE("sampled fuzzing is reproducible and distinct") {
  const FuzzSummary a = fuzz(BigInt(40), 6, 42);
  const FuzzSummary b = fuzz(BigInt(40), 6, 42);
  REQUIRE_FALSE(a.exhaustive);
  REQUIRE(a.pass());
  REQUIRE(a.reports.size() == 6);
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    REQUIRE(a.reports[i].xi == b.reports[i].xi);
  }
  for (std::size_t i = 0; i + 1 < a.reports.size(); ++i) {
    REQUIRE(a.reports[i].xi < a.reports[i + 1].xi);
  }
}

TEST_CASE("fuzz argument validation") {
  REQUIRE_THROWS_AS(fuzz(BigInt(0)), std::invalid_argument);
  REQUIRE_THROWS_AS(fuzz(BigInt("8589934592")), std::invalid_argument);
}

}  // namespace
}  // namespace cfpgn
