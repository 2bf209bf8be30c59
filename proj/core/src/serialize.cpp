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

#include "netwit/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace netwit {

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::string format_scalar(const Json& j) {
  switch (j.type()) {
    case Json::value_t::number_float: return format_double(j.get<double>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::boolean:
    case Json::value_t::string:
    case Json::value_t::null: return j.dump();
    default: throw std::logic_error("format_scalar: not a scalar");
  }
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void emit(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    // nlohmann::json stores objects in a std::map, so iteration is key-sorted
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      emit(value, depth + 1, out);
    }
    out += "\n" + close_pad + "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return is_scalar(e); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += format_scalar(j[i]);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      emit(j[i], depth + 1, out);
    }
    out += "\n" + close_pad + "]";
  } else {
    out += format_scalar(j);
  }
}

void collect(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      collect(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (!j.is_array()) {
    std::string value = format_scalar(j);
    if (j.is_string() || value.front() == '"') {
      const std::string raw = j.is_string() ? j.get<std::string>() : value.substr(1, value.size() - 2);
      std::string quoted = "\"";
      for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      value = quoted + "\"";
    }
    out.emplace_back(prefix, value);
  }
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (const cplx& z : m.data()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"dims", m.dims()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto dims = j.at("dims").get<Dims>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) throw std::invalid_argument("matrix_from_json: re/im size mismatch");
  std::vector<cplx> data(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) data[i] = {re[i], im[i]};
  return ComplexMatrix(dims, std::move(data));
}

Json to_json(const Witness& w) {
  Json j{{"family", std::string(to_string(w.family()))},
         {"eta", w.eta()},
         {"dims", w.matrix().dims()},
         {"matrix", to_json(w.matrix())},
         {"trace", w.matrix().trace().real()},
         {"min_eigenvalue", min_eigenvalue(w.matrix())}};
  if (w.lambda()) j["lambda"] = w.lambda()->values();
  return j;
}

Json to_json(const NetworkState& n) {
  return {{"family", n.family()},
          {"parties", n.parties()},
          {"local_dim", n.local_dim()},
          {"eta", n.eta()},
          {"recon_constant", n.recon_constant()},
          {"product_terms", n.terms().size()},
          {"structurally_separable", n.structurally_separable()},
          {"state", to_json(n.state().matrix())}};
}

Json to_json(const DetectionReport& r) {
  Json j{{"family", r.family},
         {"parties", r.parties},
         {"local_dim", r.local_dim},
         {"success_prob", r.success_prob},
         {"singlet_fraction", r.singlet_fraction},
         {"eta", r.eta},
         {"verdict", std::string(to_string(r.verdict))},
         {"witness_expectation", r.witness_expectation},
         {"margin", r.margin},
         {"pair_readout", r.pair_readout},
         {"pair_readout_threshold", r.pair_readout_threshold},
         {"recon_constant", r.recon_constant}};
  if (r.shots) {
    const ShotSummary& s = *r.shots;
    j["shots"] = {{"n_total", s.n_total},
                  {"n_postselected", s.n_postselected},
                  {"n_target", s.n_target},
                  {"estimate", s.estimate},
                  {"ci_low", s.ci_low},
                  {"ci_high", s.ci_high},
                  {"postselection_rate", s.postselection_rate},
                  {"seed", s.seed}};
  }
  return j;
}

Json to_json(const std::vector<CutReport>& cuts) {
  Json out = Json::array();
  for (const auto& c : cuts) {
    out.push_back({{"label", c.label}, {"side", c.side}, {"min_eigenvalue", c.min_eigenvalue}});
  }
  return out;
}

Json to_json(const ChoiSearchResult& r) {
  Json j{{"found", r.found},
         {"p", r.p},
         {"witness_expectation", r.witness_expectation},
         {"min_pt_eigenvalue", r.min_pt_eigenvalue},
         {"grid_points", r.grid_points},
         {"refine_accepted", r.refine_accepted}};
  if (r.rho) j["rho"] = to_json(r.rho->matrix());
  return j;
}

Json to_json(const GraphSpec& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.n()}, {"edges", edges}};
}

GraphSpec graph_from_json(const Json& j) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph edge must be [i, j]");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return GraphSpec(j.at("n").get<std::size_t>(), std::move(edges));
}

Json tolerances_json() {
  return {{"structural", kStructuralTol},
          {"identity", kIdentityTol},
          {"ppt_floor", kPptFloor},
          {"seesaw_floor", 1e-6},
          {"boundary_band", 1e-9},
          {"vanishing_probability", 1e-14}};
}

std::string canonical_json(const Json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

std::string flatten_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  collect(j, "", cells);
  std::string header;
  std::string values;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) {
      header += ",";
      values += ",";
    }
    header += cells[i].first;
    values += cells[i].second;
  }
  return header + "\n" + values + "\n";
}

void write_report(const Json& report, const std::string& path, ReportFormat format) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open report file for writing: " + path);
  f << (format == ReportFormat::json ? canonical_json(report) : flatten_csv(report));
  if (!f) throw std::runtime_error("failed writing report file: " + path);
}

}  // namespace netwit
