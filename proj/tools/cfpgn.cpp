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
//
// Command-line front end.  Machine-readable JSON goes to stdout, human
// summaries go to stderr, and a failed check exits nonzero.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfpgn/cfpgn.hpp"

namespace {

using cfpgn::BigInt;
using cfpgn::Rational;

// The value a subcommand works on: either the positional argument (a
// fraction, an integer, or a decimal) or an explicit quotient list.
struct XiArgs {
  std::string positional;
  std::string quotients_csv;

  void attach(CLI::App& cmd) {
    auto* pos = cmd.add_option(
        "xi", positional, "value, as \"p/q\", an integer, or a decimal");
    auto* quo = cmd.add_option("--quotients", quotients_csv,
                               "value as continued fraction quotients "
                               "\"a1,a2,...\" (each at least 1, last at "
                               "least 2)");
    pos->excludes(quo);
    quo->excludes(pos);
  }

  Rational value() const {
    if (!quotients_csv.empty()) {
      std::vector<BigInt> quotients;
      std::stringstream stream(quotients_csv);
      std::string item;
      while (std::getline(stream, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) {
          throw CLI::ValidationError("--quotients", "empty entry in list");
        }
        quotients.emplace_back(item.substr(first, last - first + 1));
      }
      if (quotients.empty()) {
        throw CLI::ValidationError("--quotients", "empty list");
      }
      return cfpgn::quotients_value(quotients);
    }
    if (positional.empty()) {
      throw CLI::ValidationError("xi", "give a value or --quotients");
    }
    return Rational::parse(positional);
  }
};

// Depth that always yields a complete (never truncated) graph.
long long full_depth(const Rational& xi) {
  const auto s = cfpgn::expand(cfpgn::normalize(xi)).s();
  return s > 1 ? static_cast<long long>(s - 1) : 1;
}

void emit(const cfpgn::Json& json) { std::cout << json.dump(2) << "\n"; }

int run_expand(const XiArgs& xi_args) {
  const Rational raw = xi_args.value();
  const Rational xi = cfpgn::normalize(raw);
  const cfpgn::CFExpansion cf = cfpgn::expand(xi);
  const cfpgn::ConvergentTable table = cfpgn::convergents(cf);

  cfpgn::Json out;
  out["input"] = raw.str();
  out["xi"] = xi.str();
  out["quotients"] = cfpgn::json_of(cf)["quotients"];
  out["rows"] = cfpgn::json_of(table)["rows"];
  emit(out);
  std::cerr << raw.str() << " normalizes to " << xi.str() << " = " << cf.str()
            << " with " << table.s() << " convergent(s)\n";
  return 0;
}

int run_graph(const XiArgs& xi_args, long long depth, bool as_json,
              const std::string& svg_path) {
  const cfpgn::CombinedGraph graph = cfpgn::build_graph(xi_args.value(), depth);
  std::cerr << "combined graph of " << graph.xi.str() << ": "
            << graph.q_maxima.size() << " lower-curve maxima, "
            << graph.L1.vertices.size() << "+" << graph.L2.vertices.size()
            << " vertices" << (graph.truncated ? " (truncated)" : "") << "\n";
  if (!svg_path.empty()) {
    std::ofstream file(svg_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + svg_path);
    const std::string svg = cfpgn::render_svg(graph);
    file << svg;
    std::cerr << "wrote " << svg_path << " (" << svg.size() << " bytes)\n";
    return 0;
  }
  (void)as_json;  // JSON is also the default.
  emit(cfpgn::json_of(graph));
  return 0;
}

int run_decode(const XiArgs& xi_args) {
  const Rational xi = cfpgn::normalize(xi_args.value());
  const cfpgn::CFExpansion expanded = cfpgn::expand(xi);
  const cfpgn::CombinedGraph graph = cfpgn::build_graph(xi, full_depth(xi));
  const cfpgn::DecodeResult decoded = cfpgn::decode(graph);

  const bool match = !decoded.partial &&
                     decoded.quotients == expanded.quotients &&
                     decoded.value && *decoded.value == xi;
  cfpgn::CFExpansion shown;
  shown.value = decoded.value.value_or(Rational(0));
  shown.quotients = decoded.quotients;

  cfpgn::Json out;
  out["xi"] = xi.str();
  out["expanded"] = expanded.str();
  out["decoded"] = shown.str();
  out["match"] = match;
  emit(out);
  std::cerr << "expanded: " << expanded.str() << "\n"
            << "decoded:  " << shown.str() << "\n"
            << (match ? "the graph alone recovers the expansion\n"
                      : "MISMATCH between expansion and decode\n");
  return match ? 0 : 1;
}

int run_oracle(const XiArgs& xi_args, const std::string& q_ratio) {
  const Rational ratio = Rational::parse(q_ratio);
  const cfpgn::MinimaWitness witness =
      cfpgn::brute_minima(xi_args.value(), cfpgn::LogCoord(ratio));
  emit(cfpgn::json_of(witness));
  std::cerr << "minima at q = (1/2)log(" << ratio.str() << "): lambda1^2 = "
            << witness.lambda1.ratio().str() << " by " << witness.w1.str()
            << ", lambda2^2 = " << witness.lambda2.ratio().str() << " by "
            << witness.w2.str() << "\n";
  return 0;
}

int run_verify(const XiArgs& xi_args, std::size_t samples,
               const std::string& bound, std::uint64_t seed) {
  std::optional<BigInt> oracle_bound;
  if (!bound.empty()) oracle_bound = BigInt(bound);
  const cfpgn::VerifyReport report =
      cfpgn::verify_one(xi_args.value(), samples, oracle_bound, seed);
  emit(cfpgn::json_of(report));
  for (const cfpgn::CheckResult& check : report.checks) {
    std::cerr << (check.pass ? "pass " : "FAIL ") << check.name;
    if (!check.detail.empty()) std::cerr << " — " << check.detail;
    std::cerr << "\n";
  }
  std::cerr << (report.pass() ? "all checks passed for "
                              : "CHECKS FAILED for ")
            << report.xi.str() << "\n";
  return report.pass() ? 0 : 1;
}

int run_fuzz(const std::string& max_den, std::size_t count,
             std::uint64_t seed) {
  const cfpgn::FuzzSummary summary = cfpgn::fuzz(BigInt(max_den), count, seed);
  emit(cfpgn::json_of(summary));
  std::cerr << "verified " << summary.reports.size() << " value(s) up to "
            << "denominator " << summary.max_den.str()
            << (summary.exhaustive ? " (exhaustive)" : "") << ", "
            << summary.failures.size() << " failure(s)\n";
  return summary.pass() ? 0 : 1;
}

int run_render(const XiArgs& xi_args, const std::string& out_path,
               double q_max, bool trajectories) {
  const Rational xi = cfpgn::normalize(xi_args.value());
  const cfpgn::CombinedGraph graph = cfpgn::build_graph(xi, full_depth(xi));
  cfpgn::RenderConfig config;
  config.q_max = q_max;
  config.show_trajectories = trajectories;
  const std::string svg = cfpgn::render_svg(graph, config);

  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + out_path);
  file << svg;
  std::cerr << "wrote " << out_path << " (" << svg.size() << " bytes, "
            << graph.q_maxima.size() << " axis dot(s))\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combined graphs of the two parametric successive minima"};
  app.require_subcommand(1);

  XiArgs expand_xi;
  CLI::App* cmd_expand = app.add_subcommand(
      "expand", "continued fraction expansion and convergent table");
  expand_xi.attach(*cmd_expand);

  XiArgs graph_xi;
  long long depth = 64;
  bool graph_json = false;
  std::string graph_svg;
  CLI::App* cmd_graph =
      app.add_subcommand("graph", "build the combined graph of both minima");
  graph_xi.attach(*cmd_graph);
  cmd_graph->add_option("--depth", depth, "largest number of intervals")
      ->envname("CFPGN_DEPTH")
      ->capture_default_str();
  auto* opt_json =
      cmd_graph->add_flag("--json", graph_json, "write JSON to stdout");
  auto* opt_svg = cmd_graph->add_option("--svg", graph_svg,
                                        "write an SVG picture to this path");
  opt_json->excludes(opt_svg);
  opt_svg->excludes(opt_json);

  XiArgs decode_xi;
  CLI::App* cmd_decode = app.add_subcommand(
      "decode", "read the expansion back off the graph and compare");
  decode_xi.attach(*cmd_decode);

  XiArgs oracle_xi;
  std::string q_ratio;
  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle", "brute-force both minima at one parameter value");
  oracle_xi.attach(*cmd_oracle);
  cmd_oracle
      ->add_option("--q-ratio", q_ratio,
                   "parameter as the ratio r with q = (1/2)log r, at least 1")
      ->required();

  XiArgs verify_xi;
  std::size_t samples = 0;
  std::string bound;
  std::uint64_t verify_seed = 0;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run every consistency check on one value");
  verify_xi.attach(*cmd_verify);
  cmd_verify->add_option("--samples", samples,
                         "extra random abscissae for the oracle comparison");
  cmd_verify->add_option(
      "--bound", bound, "scan |Q| up to this bound in the emptiness check");
  cmd_verify->add_option("--seed", verify_seed, "seed for the extra samples");

  std::string max_den;
  std::size_t count = 100;
  std::uint64_t fuzz_seed = 0;
  CLI::App* cmd_fuzz = app.add_subcommand(
      "fuzz", "verify many random values with bounded denominator");
  cmd_fuzz->add_option("--max-den", max_den, "largest denominator")
      ->required();
  cmd_fuzz->add_option("--count", count, "how many values to verify")
      ->capture_default_str();
  cmd_fuzz->add_option("--seed", fuzz_seed, "sampling seed")
      ->capture_default_str();

  XiArgs render_xi;
  std::string out_path;
  double q_max = 0;
  bool trajectories = false;
  CLI::App* cmd_render =
      app.add_subcommand("render", "draw the combined graph as SVG");
  render_xi.attach(*cmd_render);
  cmd_render->add_option("-o,--output", out_path, "output SVG path")
      ->required();
  cmd_render->add_option(
      "--qmax", q_max, "right edge of the plot window (0 = automatic)");
  cmd_render->add_flag("--trajectories", trajectories,
                       "dashed cost curves of the owning points");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_expand->parsed()) return run_expand(expand_xi);
    if (cmd_graph->parsed()) {
      return run_graph(graph_xi, depth, graph_json, graph_svg);
    }
    if (cmd_decode->parsed()) return run_decode(decode_xi);
    if (cmd_oracle->parsed()) return run_oracle(oracle_xi, q_ratio);
    if (cmd_verify->parsed()) {
      return run_verify(verify_xi, samples, bound, verify_seed);
    }
    if (cmd_fuzz->parsed()) return run_fuzz(max_den, count, fuzz_seed);
    if (cmd_render->parsed()) {
      return run_render(render_xi, out_path, q_max, trajectories);
    }
  } catch (const CLI::Error& error) {
    return app.exit(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 1;
}
