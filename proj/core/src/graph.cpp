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

#include "netwit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace netwit {

namespace {

constexpr std::size_t kMaxNetworkVertices = 4;

ComplexMatrix pauli_x() { return ComplexMatrix({2}, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix({2}, {1.0, 0.0, 0.0, -1.0}); }
ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix({2}, {h, h, h, -h});
}

// Bit of vertex v (1-based) in basis index b; vertex 1 is most significant.
int bit(std::size_t b, std::size_t v, std::size_t n) { return static_cast<int>((b >> (n - v)) & 1U); }

ComplexMatrix cz_layer(const GraphSpec& g) {
  const std::size_t side = std::size_t{1} << g.n();
  std::vector<double> diag(side, 1.0);
  for (std::size_t b = 0; b < side; ++b) {
    for (const auto& [i, j] : g.edges()) {
      if (bit(b, i, g.n()) && bit(b, j, g.n())) diag[b] = -diag[b];
    }
  }
  return ComplexMatrix::diagonal(diag, Dims(g.n(), 2));
}

ComplexMatrix cnot(std::size_t control, std::size_t target) {
  ComplexMatrix m(Dims(3, 2));
  for (std::size_t b = 0; b < 8; ++b) {
    const std::size_t flipped = bit(b, control, 3) ? b ^ (std::size_t{1} << (3 - target)) : b;
    m(flipped, b) = 1.0;
  }
  return m;
}

void check_labels(const GraphSpec& g, const std::vector<GraphBasisLabel>& s) {
  if (s.empty()) throw std::invalid_argument("graph witness: label set S is empty");
  std::set<std::size_t> seen;
  bool has_zero = false;
  for (const auto& x : s) {
    if (x.size() != g.n()) throw std::invalid_argument("graph witness: label length != n");
    if (!seen.insert(x.index()).second) {
      throw std::invalid_argument("graph witness: duplicate label " + x.str());
    }
    has_zero = has_zero || x.index() == 0;
  }
  if (!has_zero) throw std::invalid_argument("graph witness: S must contain the all-zeros label");
}

}  // namespace

GraphSpec::GraphSpec(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n) {
  if (n < 1) throw std::invalid_argument("GraphSpec: need at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [i, j] : edges) {
    if (i == j) throw std::invalid_argument("GraphSpec: self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n) throw std::invalid_argument("GraphSpec: vertex out of range");
    if (!seen.insert({i, j}).second) {
      throw std::invalid_argument("GraphSpec: duplicate edge (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
    edges_.emplace_back(i, j);
  }
}

std::vector<std::size_t> GraphSpec::neighbours(std::size_t i) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges_) {
    if (a == i) out.push_back(b);
    if (b == i) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphBasisLabel::GraphBasisLabel(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("GraphBasisLabel: empty label");
  for (int b : bits_) {
    if (b != 0 && b != 1) throw std::invalid_argument("GraphBasisLabel: entries must be 0 or 1");
  }
}

GraphBasisLabel GraphBasisLabel::parse(const std::string& bits) {
  std::vector<int> out;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("GraphBasisLabel: bad character in '" + bits + "'");
    }
    out.push_back(c - '0');
  }
  return GraphBasisLabel(std::move(out));
}

GraphBasisLabel GraphBasisLabel::zeros(std::size_t n) {
  return GraphBasisLabel(std::vector<int>(n, 0));
}

std::size_t GraphBasisLabel::index() const {
  std::size_t out = 0;
  for (int b : bits_) out = (out << 1) | static_cast<std::size_t>(b);
  return out;
}

std::string GraphBasisLabel::str() const {
  std::string out;
  for (int b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

ComplexMatrix generator(const GraphSpec& g, std::size_t i) {
  if (i < 1 || i > g.n()) throw std::invalid_argument("generator: vertex index out of range");
  const Dims dims(g.n(), 2);
  ComplexMatrix out = embed(pauli_x(), {i - 1}, dims);
  for (std::size_t j : g.neighbours(i)) out = out * embed(pauli_z(), {j - 1}, dims);
  return out;
}

ComplexMatrix gamma_projector(const GraphSpec& g, std::size_t i, int k) {
  const Dims dims(g.n(), 2);
  const double sign = k == 0 ? 1.0 : -1.0;
  return 0.5 * (ComplexMatrix::identity(dims) + sign * generator(g, i));
}

Ket graph_state_circuit(const GraphSpec& g) {
  return graph_basis_state(g, GraphBasisLabel::zeros(g.n()));
}

Ket graph_basis_state(const GraphSpec& g, const GraphBasisLabel& x) {
  if (x.size() != g.n()) throw std::invalid_argument("graph_basis_state: label length != n");
  const std::size_t n = g.n();
  const std::size_t side = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(side));
  Ket out(side);
  for (std::size_t b = 0; b < side; ++b) {
    int parity = 0;
    for (const auto& [i, j] : g.edges()) parity ^= bit(b, i, n) & bit(b, j, n);
    for (std::size_t v = 1; v <= n; ++v) parity ^= x[v - 1] & bit(b, v, n);
    out[b] = parity ? -amp : amp;
  }
  return out;
}

ComplexMatrix graph_readout_unitary(const GraphSpec& g) {
  ComplexMatrix h = hadamard();
  for (std::size_t v = 1; v < g.n(); ++v) h = kron(h, hadamard());
  return h * cz_layer(g);
}

double graph_measurement_circuit(const GraphSpec& g, const ComplexMatrix& sigma) {
  const ComplexMatrix u = graph_readout_unitary(g);
  if (sigma.side() != u.side()) throw std::invalid_argument("graph_measurement_circuit: size");
  cplx acc = 0.0;
  for (std::size_t a = 0; a < u.side(); ++a) {
    for (std::size_t b = 0; b < u.side(); ++b) acc += u(0, a) * sigma(a, b) * std::conj(u(0, b));
  }
  return acc.real();
}

Witness graph_witness(const GraphSpec& g, const std::vector<GraphBasisLabel>& s) {
  check_labels(g, s);
  const Dims dims(g.n(), 2);
  ComplexMatrix w = -ComplexMatrix::projector(graph_state_circuit(g), dims);
  for (const auto& x : s) w += 0.5 * ComplexMatrix::projector(graph_basis_state(g, x), dims);
  return Witness(std::move(w), WitnessFamily::graph, 0.5);
}

NetworkState graph_network(const GraphSpec& g, const std::vector<GraphBasisLabel>& s) {
  check_labels(g, s);
  if (g.n() > kMaxNetworkVertices) {
    throw std::invalid_argument("graph_network: at most 4 vertices supported");
  }
  const Dims dims(g.n(), 2);
  const double weight = 1.0 / static_cast<double>(s.size());
  std::vector<ProductTerm> terms;
  for (const auto& x : s) {
    const ComplexMatrix p = ComplexMatrix::projector(graph_basis_state(g, x), dims);
    terms.push_back({weight, p, p});
  }
  return NetworkState("graph", g.n(), 2, std::move(terms), 0.5, weight, graph_state_circuit(g),
                      graph_readout_unitary(g));
}

GraphSpec cl4_graph() { return GraphSpec(4, {{1, 2}, {2, 3}, {3, 4}}); }

std::vector<GraphBasisLabel> cl4_labels() {
  std::vector<GraphBasisLabel> out;
  for (const char* bits : {"0000", "0001", "0010", "0011", "0100", "0101", "0110", "0111", "1000",
                           "1010", "1100", "1110"}) {
    out.push_back(GraphBasisLabel::parse(bits));
  }
  return out;
}

Ket ghz_family(int a, int b, int c) {
  for (int v : {a, b, c}) {
    if (v != 0 && v != 1) throw std::invalid_argument("ghz_family: labels must be 0 or 1");
  }
  const double amp = 1.0 / std::sqrt(2.0);
  Ket psi(8);
  psi[0] = amp;
  psi[7] = amp;
  const ComplexMatrix id = ComplexMatrix::identity({2});
  const ComplexMatrix op = kron({a ? pauli_z() : id, b ? pauli_x() : id, c ? pauli_x() : id});
  return netwit::apply(op, psi);
}

Witness ghz_witness() {
  const Dims dims(3, 2);
  ComplexMatrix w = 0.5 * ComplexMatrix::identity(dims);
  w -= ComplexMatrix::projector(ghz_family(0, 0, 0), dims);
  return Witness(std::move(w), WitnessFamily::graph, 0.5);
}

ComplexMatrix ghz_readout_unitary() {
  const ComplexMatrix id = ComplexMatrix::identity({2});
  const ComplexMatrix h1 = kron({hadamard(), id, id});
  return h1 * cnot(1, 2) * cnot(1, 3);
}

NetworkState ghz_network() {
  const Dims dims(3, 2);
  std::vector<ProductTerm> terms;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const ComplexMatrix p = ComplexMatrix::projector(ghz_family(a, b, c), dims);
        terms.push_back({0.125, p, p});
      }
    }
  }
  return NetworkState("ghz", 3, 2, std::move(terms), 0.5, 0.125, ghz_family(0, 0, 0),
                      ghz_readout_unitary());
}

}  // namespace netwit
