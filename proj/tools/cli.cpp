// Copyright 2026 The netwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "netwit/bell.hpp"
#include "netwit/graph.hpp"
#include "netwit/network.hpp"
#include "netwit/protocol.hpp"
#include "netwit/serialize.hpp"
#include "netwit/states.hpp"
#include "netwit/witness.hpp"

namespace netwit::cli {

namespace {

constexpr double kReconTol = 1e-9;
constexpr double kPptReportTol = 1e-10;
constexpr double kChoiThreshold = 2.0 / 3.0;
constexpr double kProportionalityTol = 1e-9;
constexpr int kProportionalitySamples = 50;

struct Options {
  std::string family = "two-qubit";
  std::size_t d = 0;
  std::string lambda;
  std::string eta;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  std::size_t resolution = 40;
  std::string out;
  std::string format = "json";
  std::string state = "phi-plus";
  bool expect_ppt = false;
};

struct Instance {
  Witness witness;
  NetworkState network;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_number = [&](const std::string& part) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) {
      throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    return value;
  };
  if (slash == std::string::npos) return parse_number(text);
  const double den = parse_number(text.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return parse_number(text.substr(0, slash)) / den;
}

std::size_t default_dim(const std::string& family) {
  if (family == "two-qubit" || family == "smolin" || family == "ghz" || family == "cl4") return 2;
  if (family == "breuer-hall") return 4;
  return 3;
}

Json describe_inputs(const Options& o, std::size_t d) {
  Json j{{"family", o.family}, {"d", d}, {"seed", o.seed}, {"format", o.format}};
  if (!o.lambda.empty()) {
    j["lambda"] = {{"text", o.lambda}, {"values", parse_rational_list(o.lambda)}};
  }
  if (!o.eta.empty()) j["eta"] = {{"text", o.eta}, {"value", parse_rational(o.eta)}};
  return j;
}

Instance make_instance(const Options& o, std::size_t d) {
  const std::string& f = o.family;
  auto require_dim = [&](std::size_t expected) {
    if (d != expected) {
      throw UsageError("family " + f + " requires --d " + std::to_string(expected));
    }
  };
  if (f == "two-qubit") {
    require_dim(2);
    return {two_qubit_pt_witness(), two_qubit_network()};
  }
  if (f == "decomposable") {
    Rng rng(o.seed);
    const DensityOperator q(ComplexMatrix::projector(random_pure_state(d * d, rng), {d, d}));
    return {decomposable_witness(q), decomposable_network(q)};
  }
  if (f == "flip") return {flip_witness(d), flip_network(d)};
  if (f == "pbd") {
    if (o.lambda.empty()) throw UsageError("family pbd requires --lambda");
    const LambdaVec lambda(parse_rational_list(o.lambda));
    if (lambda.size() != d) throw UsageError("--lambda must have d entries");
    return {bell_diagonal_witness(lambda), pbd_network(lambda)};
  }
  if (f == "reduction") return {reduction_witness(d), reduction_network(d)};
  if (f == "smolin") {
    require_dim(2);
    return {reduction_witness(2), smolin_network()};
  }
  if (f == "choi") {
    require_dim(3);
    return {choi_witness(), choi_network()};
  }
  if (f == "breuer-hall") return {breuer_hall_witness(d), bh_network(d)};
  if (f == "ghz") {
    require_dim(2);
    return {ghz_witness(), ghz_network()};
  }
  if (f == "cl4") {
    require_dim(2);
    return {graph_witness(cl4_graph(), cl4_labels()), graph_network(cl4_graph(), cl4_labels())};
  }
  throw UsageError("unknown family '" + f + "'");
}

DensityOperator make_state(const Options& o, const NetworkState& n) {
  const Dims dims = n.layer_dims();
  const std::size_t d = n.local_dim();
  const bool bipartite = n.parties() == 2;
  const std::string& s = o.state;
  if (s == "maximally-mixed") {
    const double side = static_cast<double>(product_of(dims));
    return DensityOperator(ComplexMatrix::identity(dims) * (1.0 / side));
  }
  if (s == "random") return random_density(dims, o.seed);
  if (s == "phi-plus" && bipartite) return DensityOperator(p00(d));
  if (s == "psi-minus" && bipartite && d == 2) {
    return DensityOperator(bell_projector(BellIndex(2, 1, 1)));
  }
  if (s.rfind("isotropic:", 0) == 0 && bipartite) {
    return isotropic_state(d, parse_rational(s.substr(10)));
  }
  if (s == "separable" && bipartite) return random_separable(d, 20, o.seed);
  if (s == "choi-ppt" && bipartite && d == 3) {
    ChoiSearchOptions search;
    search.resolution = o.resolution;
    search.seed = o.seed;
    auto found = find_choi_detected_ppt(search);
    return std::move(*found.rho);
  }
  if (s == "ghz" && dims == Dims(3, 2)) {
    return DensityOperator(ComplexMatrix::projector(ghz_family(0, 0, 0), dims));
  }
  if (s == "cluster" && dims == Dims(4, 2)) {
    return DensityOperator(ComplexMatrix::projector(graph_state_circuit(cl4_graph()), dims));
  }
  throw UsageError("state '" + s + "' is unknown or does not fit family " + o.family);
}

double eta_for(const Options& o, const Instance& inst) {
  return o.eta.empty() ? inst.witness.eta() : parse_rational(o.eta);
}

struct Outcome {
  Json outputs;
  bool pass;
};

Outcome witness_build(const Options& o, std::size_t d) {
  const Instance inst = make_instance(o, d);
  SeesawOptions seesaw;
  seesaw.seed = o.seed;
  const double floor = sep_floor_estimate(inst.witness, seesaw).value;
  Json out = to_json(inst.witness);
  out["seesaw_floor"] = floor;
  out["seesaw_restarts"] = seesaw.restarts;
  return {out, floor >= -1e-6};
}

Outcome network_build(const Options& o, std::size_t d) {
  const Instance inst = make_instance(o, d);
  Json out = to_json(inst.network);
  return {out, inst.network.structurally_separable()};
}

Outcome verify_reconstruction(const Options& o, std::size_t d) {
  const Instance inst = make_instance(o, d);
  const double eta = eta_for(o, inst);
  const ComplexMatrix rebuilt = reconstruct_witness(inst.network, eta);
  const ComplexMatrix expected = inst.network.recon_constant() * inst.witness.matrix().transpose();
  const double err = rebuilt.max_abs_diff(expected);
  Json out{{"eta", eta},
           {"recon_constant", inst.network.recon_constant()},
           {"max_abs_error", err},
           {"tolerance", kReconTol}};
  return {out, err <= kReconTol};
}

Outcome verify_ppt(const Options& o, std::size_t d) {
  const Instance inst = make_instance(o, d);
  const auto cuts = ppt_report(inst.network);
  double worst = 0.0;
  for (const auto& c : cuts) worst = std::min(worst, c.min_eigenvalue);
  const bool ppt = worst >= -kPptReportTol;
  Json out{{"cuts", to_json(cuts)},
           {"min_eigenvalue", worst},
           {"ppt_all_cuts", ppt},
           {"expect_ppt", o.expect_ppt},
           {"tolerance", kPptReportTol}};
  return {out, !o.expect_ppt || ppt};
}

Outcome protocol_run(const Options& o, std::size_t d) {
  const Instance inst = make_instance(o, d);
  const DensityOperator rho = make_state(o, inst.network);
  Json out = to_json(detect_exact(rho, inst.network, inst.witness));
  out["state"] = o.state;
  return {out, true};
}

Outcome protocol_shots(const Options& o, std::size_t d) {
  const Instance inst = make_instance(o, d);
  const DensityOperator rho = make_state(o, inst.network);
  ShotOptions shots;
  shots.shots = o.shots;
  shots.seed = o.seed;
  Json out = to_json(detect_shots(rho, inst.network, inst.witness, shots));
  out["state"] = o.state;
  return {out, true};
}

Outcome scan_choi(const Options& o) {
  ChoiSearchOptions search;
  search.resolution = o.resolution;
  search.seed = o.seed;
  const ChoiSearchResult found = find_choi_detected_ppt(search);
  Json out = to_json(found);
  out["resolution"] = o.resolution;
  if (!found.rho) return {out, false};
  const DetectionReport report = detect_exact(*found.rho, choi_network(), choi_witness());
  out["detection"] = to_json(report);
  out["reduction_expectation"] =
      trace_of_product(found.rho->matrix(), reduction_witness(3).matrix()).real();
  const bool pass = found.found && report.verdict == Verdict::detected &&
                    report.singlet_fraction > kChoiThreshold;
  return {out, pass};
}

Outcome graph_demo(const Options& o) {
  const bool ghz = o.family == "ghz";
  if (!ghz && o.family != "cl4") throw UsageError("graph demo supports --family cl4 or ghz");
  const Instance inst = make_instance(o, 2);
  const Dims dims = inst.network.layer_dims();
  const double side = static_cast<double>(product_of(dims));
  const DensityOperator target(ComplexMatrix::projector(inst.network.target(), dims));
  const DensityOperator mixed(ComplexMatrix::identity(dims) * (1.0 / side));

  Json out{{"graph", ghz ? Json("ghz") : to_json(cl4_graph())}};
  if (!ghz) {
    Json labels = Json::array();
    for (const auto& x : cl4_labels()) labels.push_back(x.str());
    out["labels"] = labels;
  }
  const DetectionReport on_target = detect_exact(target, inst.network, inst.witness);
  const DetectionReport on_mixed = detect_exact(mixed, inst.network, inst.witness);
  out["target_state"] = to_json(on_target);
  out["maximally_mixed"] = to_json(on_mixed);

  // p (eta - f) / tr[rho W] over random states; constant when the network realises W
  const double expected = inst.network.recon_constant() / side;
  double worst_rel = 0.0;
  bool verdicts_agree = true;
  Rng rng(o.seed);
  for (int k = 0; k < kProportionalitySamples; ++k) {
    const DensityOperator rho = random_density(dims, rng);
    const DetectionReport r = detect_exact(rho, inst.network, inst.witness);
    const double lhs = r.success_prob * (r.eta - r.singlet_fraction);
    worst_rel = std::max(worst_rel, std::abs(lhs / r.witness_expectation - expected) / expected);
    verdicts_agree =
        verdicts_agree && ((r.verdict == Verdict::detected) == (r.witness_expectation < 0.0));
  }
  out["proportionality_constant"] = expected;
  out["proportionality_max_rel_deviation"] = worst_rel;
  out["verdicts_agree"] = verdicts_agree;
  if (!ghz) {
    out["circuit_overlap_target"] = graph_measurement_circuit(cl4_graph(), target.matrix());
  }
  const bool pass = on_target.verdict == Verdict::detected &&
                    on_mixed.verdict == Verdict::not_detected &&
                    worst_rel <= kProportionalityTol && verdicts_agree;
  return {out, pass};
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "Witness / network family")
      ->check(CLI::IsMember({"two-qubit", "decomposable", "flip", "pbd", "reduction", "smolin",
                             "choi", "breuer-hall", "ghz", "cl4"}));
  cmd->add_option("--d", o.d, "Local dimension (family default when omitted)")
      ->check(CLI::Range(2, 16));
  cmd->add_option("--lambda", o.lambda, "Bell-diagonal weights, e.g. 2/3,1/3,0");
  cmd->add_option("--eta", o.eta, "Threshold override (rational allowed)");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
}

void add_state(CLI::App* cmd, Options& o) {
  cmd->add_option("--state", o.state,
                  "phi-plus, psi-minus, maximally-mixed, random, separable, isotropic:F, "
                  "choi-ppt, ghz, cluster");
  cmd->add_option("--resolution", o.resolution, "Grid resolution for --state choi-ppt")
      ->check(CLI::PositiveNumber);
}

}  // namespace

std::vector<double> parse_rational_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"netwit: entanglement witnesses realised by network states and a fixed measurement",
               "netwit"};
  app.require_subcommand(1);

  std::function<Outcome()> action;
  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Outcome()> fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_common(cmd, o);
    cmd->callback([&action, &command, parent, name, fn] {
      command = parent->get_name() + " " + name;
      action = fn;
    });
    return cmd;
  };
  auto dim = [&o] { return o.d ? o.d : default_dim(o.family); };

  CLI::App* witness = app.add_subcommand("witness", "Witness construction")->require_subcommand(1);
  leaf(witness, "build", "Build a witness and estimate its separable floor",
       [&] { return witness_build(o, dim()); });

  CLI::App* network = app.add_subcommand("network", "Network construction")->require_subcommand(1);
  leaf(network, "build", "Build a network state", [&] { return network_build(o, dim()); });

  CLI::App* verify = app.add_subcommand("verify", "Identity checks")->require_subcommand(1);
  leaf(verify, "reconstruction", "Check tr_3[N (eta - target)] = k W^T",
       [&] { return verify_reconstruction(o, dim()); });
  CLI::App* ppt = leaf(verify, "ppt", "Partial-transpose spectrum of every bipartition",
                       [&] { return verify_ppt(o, dim()); });
  ppt->add_flag("--expect-ppt", o.expect_ppt, "Fail unless every cut is PPT");

  CLI::App* protocol = app.add_subcommand("protocol", "Detection protocol")->require_subcommand(1);
  add_state(leaf(protocol, "run", "Exact detection", [&] { return protocol_run(o, dim()); }), o);
  CLI::App* shots = leaf(protocol, "shots", "Finite-shot detection",
                         [&] { return protocol_shots(o, dim()); });
  add_state(shots, o);
  shots->add_option("--shots", o.shots, "Number of shots")->check(CLI::PositiveNumber);

  CLI::App* scan = app.add_subcommand("scan", "Searches")->require_subcommand(1);
  CLI::App* choi = leaf(scan, "choi-bound-entangled",
                        "Find a PPT qutrit state detected by the Choi witness",
                        [&] { return scan_choi(o); });
  choi->add_option("--resolution", o.resolution, "Grid points per simplex axis")
      ->check(CLI::PositiveNumber);

  CLI::App* graph = app.add_subcommand("graph", "Graph-state witnesses")->require_subcommand(1);
  leaf(graph, "demo", "Cl4 or GHZ detection demo", [&] {
    Options g = o;
    if (g.family == "two-qubit") g.family = "cl4";
    return graph_demo(g);
  });

  std::vector<std::string> argv_store{"netwit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Outcome result;
  Json inputs;
  try {
    inputs = describe_inputs(o, dim());
    if (command.rfind("protocol", 0) == 0) {
      inputs["state"] = o.state;
      if (command == "protocol shots") inputs["shots"] = o.shots;
    }
    if (command == "scan choi-bound-entangled" || o.state == "choi-ppt") {
      inputs["resolution"] = o.resolution;
    }
    result = action();
  } catch (const std::logic_error& e) {
    const bool usage = dynamic_cast<const std::invalid_argument*>(&e) != nullptr;
    err << "netwit: " << e.what() << "\n";
    return usage ? kExitUsage : kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "netwit: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  const Json report{{"command", command},
                    {"version", kVersion},
                    {"tolerances", tolerances_json()},
                    {"inputs", inputs},
                    {"outputs", result.outputs},
                    {"status", result.pass ? "pass" : "fail"}};
  const ReportFormat format = o.format == "csv" ? ReportFormat::csv : ReportFormat::json;
  try {
    if (o.out.empty()) {
      out << (format == ReportFormat::json ? canonical_json(report) : flatten_csv(report));
    } else {
      write_report(report, o.out, format);
    }
  } catch (const std::exception& e) {
    err << "netwit: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (!result.pass) err << "netwit: " << command << " failed verification\n";
  return result.pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace netwit::cli
