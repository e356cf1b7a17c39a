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

#include "cfpgn/json_io.hpp"

#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace cfpgn {
namespace {

Rational frac(long long n, long long d) {
  return Rational(BigInt(n), BigInt(d));
}

TEST_CASE("scalar encodings are pinned") {
  REQUIRE(json_of(LatticePoint{BigInt(2), BigInt(-1)}).dump() ==
          R"({"Q":"2","P":"-1"})");

  const Json q = json_of(LogCoord(frac(14, 3)));
  REQUIRE(q["num"] == "14");
  REQUIRE(q["den"] == "3");
  REQUIRE(q["approx"].get<double>() == LogCoord(frac(14, 3)).value());

  REQUIRE(json_of(expand(frac(3, 7))).dump() ==
          R"({"value":"3/7","quotients":["2","3"]})");
}

TEST_CASE("a convergent table lists every row exactly") {
  const Json t = json_of(convergents(frac(3, 7)));
  REQUIRE(t["xi"] == "3/7");
  REQUIRE(t["rows"].size() == 4);
  REQUIRE(t["rows"][0].dump() == R"({"n":-1,"Q":"0","P":"1","delta":"1"})");
  REQUIRE(t["rows"][1].dump() == R"({"n":0,"Q":"1","P":"0","delta":"3/7"})");
  REQUIRE(t["rows"][2].dump() == R"({"n":1,"Q":"2","P":"1","delta":"1/7"})");
  REQUIRE(t["rows"][3].dump() == R"({"n":2,"Q":"7","P":"3","delta":"0"})");
}

TEST_CASE("minima witnesses serialize both points and both values") {
  const MinimaWitness w = brute_minima(frac(3, 7), LogCoord(Rational(2)));
  const Json j = json_of(w);
  REQUIRE(j["lambda1"]["num"] == "1");
  REQUIRE(j["lambda1"]["den"] == "2");
  REQUIRE(j["lambda2"]["num"] == "32");
  REQUIRE(j["lambda2"]["den"] == "49");
  REQUIRE(j["w1"].dump() == R"({"Q":"1","P":"0"})");
  REQUIRE(j["w2"].dump() == R"({"Q":"1","P":"1"})");
}

TEST_CASE("a graph serializes curves, maxima, counts, and the flag") {
  const Json g = json_of(build_graph(frac(1, 2)));
  REQUIRE(g.size() == 6);
  REQUIRE(g["xi"] == "1/2");
  REQUIRE(g["truncated"] == false);
  REQUIRE(g["counts"].dump() == R"(["2"])");
  REQUIRE(g["q_maxima"].size() == 2);
  REQUIRE(g["q_maxima"][1]["num"] == "4");
  REQUIRE(g["q_maxima"][1]["den"] == "1");

  REQUIRE(g["L1"].size() == 3);
  REQUIRE(g["L1"][0]["q"]["num"] == "1");
  REQUIRE(g["L1"][0]["owner"].dump() == R"({"Q":"1","P":"0"})");
  // The final vertex carries the tail ray's owner.
  REQUIRE(g["L1"][2]["owner"].dump() == R"({"Q":"2","P":"1"})");
  REQUIRE(g["L2"][0]["owner"].dump() == R"({"Q":"1","P":"1"})");
  REQUIRE(g["L2"][2]["owner"].dump() == R"({"Q":"1","P":"0"})");
}

TEST_CASE("the piece starting at each vertex identifies the owner") {
  const Json g = json_of(build_graph(frac(3, 7)));
  // The L2 piece leaving the first maximum after the start belongs to the
  // unit point (1, 0), which rises across the second interval's floor.
  REQUIRE(g["L2"][3]["q"]["num"] == "14");
  REQUIRE(g["L2"][3]["q"]["den"] == "3");
  REQUIRE(g["L2"][3]["owner"].dump() == R"({"Q":"1","P":"0"})");

  // A truncated graph ends on its incoming segment's owner.
  const Json cut = json_of(build_graph(frac(21, 55), 3));
  REQUIRE(cut["truncated"] == true);
  const Json& last = cut["L2"][cut["L2"].size() - 1];
  const Json& prev = cut["L2"][cut["L2"].size() - 2];
  REQUIRE(last["owner"] == prev["owner"]);
}

TEST_CASE("verify reports serialize without timing noise") {
  const VerifyReport report = verify_one(frac(3, 7), 5, std::nullopt, 9);
  const Json j = json_of(report);
  REQUIRE(j.size() == 4);
  REQUIRE(j["xi"] == "3/7");
  REQUIRE(j["seed"] == 9);
  REQUIRE(j["pass"] == true);
  REQUIRE_FALSE(j.contains("elapsed"));
  REQUIRE(j["checks"].size() == report.checks.size());
  REQUIRE(j["checks"][0]["name"] == "cf_round_trip");
  REQUIRE(j["checks"][0]["pass"] == true);

  // Equal inputs give byte-equal reports despite differing wall time.
  const Json again = json_of(verify_one(frac(3, 7), 5, std::nullopt, 9));
  REQUIRE(j.dump(2) == again.dump(2));
}

TEST_CASE("fuzz summaries serialize deterministically") {
  const Json a = json_of(fuzz(BigInt(8), 100, 3));
  REQUIRE(a["max_den"] == "8");
  REQUIRE(a["count"] == 100);
  REQUIRE(a["seed"] == 3);
  REQUIRE(a["exhaustive"] == true);
  REQUIRE(a["pass"] == true);
  REQUIRE(a["failures"].empty());
  REQUIRE(a["reports"].size() == 12);
  REQUIRE(a["reports"][0]["xi"] == "0");
  REQUIRE(a["reports"][11]["xi"] == "1/2");

  const Json b = json_of(fuzz(BigInt(8), 100, 3));
  REQUIRE(a.dump() == b.dump());
}

}  // namespace
}  // namespace cfpgn
