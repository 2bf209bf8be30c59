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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netwit/network.hpp"
#include "netwit/tensor.hpp"
#include "netwit/witness.hpp"

namespace netwit {

/// Undirected simple graph on vertices 1..n. Edges are stored as (i, j) with i < j.
class GraphSpec {
 public:
  /// Normalises edge orientation. Throws on self-loops, duplicates or
  /// out-of-range vertices.
  GraphSpec(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t n() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Vertices adjacent to i (1-based).
  std::vector<std::size_t> neighbours(std::size_t i) const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Bit vector x_1..x_n. As a string and as a basis index, vertex 1 is the
/// leftmost / most significant bit.
class GraphBasisLabel {
 public:
  explicit GraphBasisLabel(std::vector<int> bits);
  /// Parses "0101"; throws on characters other than 0 and 1.
  static GraphBasisLabel parse(const std::string& bits);
  static GraphBasisLabel zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  int operator[](std::size_t i) const { return bits_[i]; }
  std::size_t index() const;
  std::string str() const;
  bool operator==(const GraphBasisLabel&) const = default;

 private:
  std::vector<int> bits_;
};

/// g_i = X_i prod_{j in E_i} Z_j (1-based i) on n qubits.
ComplexMatrix generator(const GraphSpec& g, std::size_t i);

/// gamma_i^(k) = (1 + (-1)^k g_i) / 2.
ComplexMatrix gamma_projector(const GraphSpec& g, std::size_t i, int k);

/// prod_{(i,j) in E} CZ_ij H^{x n} |0...0>.
Ket graph_state_circuit(const GraphSpec& g);

/// |x>_G = prod_i Z_i^{x_i} |0...0>_G.
Ket graph_basis_state(const GraphSpec& g, const GraphBasisLabel& x);

/// H^{x n} prod CZ: maps |x>_G to the computational state |x>.
ComplexMatrix graph_readout_unitary(const GraphSpec& g);

/// Probability of the all-zeros outcome after the inverse graph circuit.
double graph_measurement_circuit(const GraphSpec& g, const ComplexMatrix& sigma);

/// W_G = 1/2 sum_{x in S} |x><x|_G - |0><0|_G, threshold 1/2. S must be
/// non-empty, duplicate-free and contain 0...0.
Witness graph_witness(const GraphSpec& g, const std::vector<GraphBasisLabel>& s);

/// sum_{x in S} 1/|S| |x><x|_G x |x><x|_G on 2n qubits, recon constant 1/|S|.
/// Limited to n <= 4.
NetworkState graph_network(const GraphSpec& g, const std::vector<GraphBasisLabel>& s);

/// The four-vertex path 1-2-3-4.
GraphSpec cl4_graph();
/// The twelve labels defining W_Cl4.
std::vector<GraphBasisLabel> cl4_labels();

/// Z^a x X^b x X^c (|000> + |111>) / sqrt 2.
Ket ghz_family(int a, int b, int c);
/// 1/2 - |psi_000><psi_000|, threshold 1/2.
Witness ghz_witness();
/// 1/8 sum_{abc} psi_abc x psi_abc on six qubits, recon constant 1/8.
NetworkState ghz_network();
/// Inverse of (CNOT_13 CNOT_12 H_1): maps psi_000 to |000>.
ComplexMatrix ghz_readout_unitary();

}  // namespace netwit
