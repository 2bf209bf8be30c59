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

#include <cmath>

#include "gtest/gtest.h"
#include "netwit/protocol.hpp"
#include "netwit/states.hpp"

using namespace netwit;

namespace {

std::vector<GraphSpec> small_graphs() {
  return {GraphSpec(2, {{1, 2}}), GraphSpec(3, {{1, 2}, {2, 3}}),
          GraphSpec(3, {{1, 2}, {2, 3}, {1, 3}}), cl4_graph(), GraphSpec(4, {{1, 2}, {1, 3}, {1, 4}})};
}

std::vector<GraphBasisLabel> all_labels(std::size_t n) {
  std::vector<GraphBasisLabel> out;
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>((v >> (n - 1 - i)) & 1);
    out.emplace_back(bits);
  }
  return out;
}

}  // namespace

TEST(graph_spec, validation) {
  ASSERT_THROW(GraphSpec(3, {{1, 1}}), std::invalid_argument);
  ASSERT_THROW(GraphSpec(3, {{1, 4}}), std::invalid_argument);
  ASSERT_THROW(GraphSpec(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  const GraphSpec g(3, {{2, 1}, {3, 2}});
  ASSERT_EQ(g.neighbours(2), (std::vector<std::size_t>{1, 3}));
}

TEST(graph_label, parse_and_index) {
  const auto x = GraphBasisLabel::parse("0101");
  ASSERT_EQ(x.index(), 5u);
  ASSERT_EQ(x.str(), "0101");
  ASSERT_EQ(GraphBasisLabel::zeros(3).index(), 0u);
  ASSERT_THROW(GraphBasisLabel::parse("012"), std::invalid_argument);
}

TEST(generators, commute_and_square_to_identity) {
  for (const auto& g : small_graphs()) {
    const ComplexMatrix id = ComplexMatrix::identity(Dims(g.n(), 2));
    for (std::size_t i = 1; i <= g.n(); ++i) {
      const ComplexMatrix gi = generator(g, i);
      ASSERT_LE((gi * gi).max_abs_diff(id), 1e-15);
      for (std::size_t j = 1; j <= g.n(); ++j) {
        const ComplexMatrix gj = generator(g, j);
        ASSERT_LE((gi * gj).max_abs_diff(gj * gi), 1e-15);
      }
    }
  }
}

TEST(graph_state, stabilised_by_generators) {
  for (const auto& g : small_graphs()) {
    const Ket psi = graph_state_circuit(g);
    for (std::size_t i = 1; i <= g.n(); ++i) {
      ASSERT_NEAR(overlap(psi, generator(g, i)).real(), 1.0, 1e-14);
    }
  }
}

TEST(graph_state, single_edge_and_empty_graph) {
  const Ket e = graph_state_circuit(GraphSpec(2, {{1, 2}}));
  ASSERT_NEAR(e[0].real(), 0.5, 1e-15);
  ASSERT_NEAR(e[1].real(), 0.5, 1e-15);
  ASSERT_NEAR(e[2].real(), 0.5, 1e-15);
  ASSERT_NEAR(e[3].real(), -0.5, 1e-15);
  const Ket plus = graph_state_circuit(GraphSpec(2, {}));
  for (const auto& a : plus) ASSERT_NEAR(a.real(), 0.5, 1e-15);
}

TEST(graph_basis, gram_matrix_is_identity) {
  for (const auto& g : small_graphs()) {
    const auto labels = all_labels(g.n());
    for (const auto& x : labels) {
      const Ket u = graph_basis_state(g, x);
      for (const auto& y : labels) {
        ASSERT_NEAR(std::abs(inner(u, graph_basis_state(g, y))), x == y ? 1.0 : 0.0, 1e-14);
      }
    }
  }
}

TEST(graph_basis, eigenvalues_of_generators) {
  for (const auto& g : small_graphs()) {
    for (const auto& x : all_labels(g.n())) {
      const Ket u = graph_basis_state(g, x);
      for (std::size_t i = 1; i <= g.n(); ++i) {
        const double sign = x[i - 1] ? -1.0 : 1.0;
        ASSERT_NEAR(overlap(u, generator(g, i)).real(), sign, 1e-14);
      }
    }
  }
}

TEST(graph_basis, gamma_product_is_projector) {
  for (const auto& g : small_graphs()) {
    for (const auto& x : all_labels(g.n())) {
      ComplexMatrix prod = ComplexMatrix::identity(Dims(g.n(), 2));
      for (std::size_t i = 1; i <= g.n(); ++i) prod = prod * gamma_projector(g, i, x[i - 1]);
      const ComplexMatrix expected = ComplexMatrix::projector(graph_basis_state(g, x), Dims(g.n(), 2));
      ASSERT_LE(prod.max_abs_diff(expected), 1e-14);
    }
  }
}

TEST(graph_readout, maps_graph_state_to_zeros) {
  for (const auto& g : small_graphs()) {
    const ComplexMatrix u = graph_readout_unitary(g);
    for (const auto& x : all_labels(g.n())) {
      const Ket out = netwit::apply(u, graph_basis_state(g, x));
      ASSERT_NEAR(std::abs(out[x.index()]), 1.0, 1e-14);
    }
  }
}

TEST(graph_readout, circuit_probability_is_fidelity) {
  const GraphSpec g = cl4_graph();
  const Ket psi = graph_state_circuit(g);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const DensityOperator sigma = random_density(Dims(4, 2), seed);
    ASSERT_NEAR(graph_measurement_circuit(g, sigma.matrix()), overlap(psi, sigma.matrix()).real(), 1e-13);
  }
}

TEST(graph_witness, requires_zero_label) {
  const GraphSpec g(2, {{1, 2}});
  ASSERT_THROW(graph_witness(g, {GraphBasisLabel::parse("01")}), std::invalid_argument);
  ASSERT_THROW(graph_witness(g, {}), std::invalid_argument);
  ASSERT_THROW(graph_witness(g, {GraphBasisLabel::zeros(2), GraphBasisLabel::zeros(2)}),
               std::invalid_argument);
}

TEST(graph_network, cl4_reconstruction) {
  const GraphSpec g = cl4_graph();
  const NetworkState n = graph_network(g, cl4_labels());
  const Witness w = graph_witness(g, cl4_labels());
  ASSERT_EQ(cl4_labels().size(), 12u);
  ASSERT_NEAR(n.recon_constant(), 1.0 / 12.0, 1e-15);
  ASSERT_LE(reconstruct_witness(n, 0.5).max_abs_diff(n.recon_constant() * w.matrix().transpose()), 1e-12);
  ASSERT_TRUE(n.structurally_separable());
}

TEST(graph_network, cl4_values) {
  const GraphSpec g = cl4_graph();
  const NetworkState n = graph_network(g, cl4_labels());
  const Witness w = graph_witness(g, cl4_labels());
  const DensityOperator cluster(ComplexMatrix::projector(graph_state_circuit(g), Dims(4, 2)));
  const DetectionReport r = detect_exact(cluster, n, w);
  ASSERT_EQ(r.verdict, Verdict::detected);
  ASSERT_NEAR(r.witness_expectation, -0.5, 1e-12);
  const DensityOperator mixed((1.0 / 16.0) * ComplexMatrix::identity(Dims(4, 2)));
  const DetectionReport m = detect_exact(mixed, n, w);
  ASSERT_EQ(m.verdict, Verdict::not_detected);
  ASSERT_NEAR(m.witness_expectation, 12.0 / 32.0 - 1.0 / 16.0, 1e-12);
}

TEST(graph_network, proportionality_over_random_states) {
  const GraphSpec g = cl4_graph();
  const NetworkState n = graph_network(g, cl4_labels());
  const Witness w = graph_witness(g, cl4_labels());
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const DensityOperator rho = random_density(Dims(4, 2), seed);
    const DetectionReport r = detect_exact(rho, n, w);
    const double expectation = trace_of_product(rho.matrix(), w.matrix()).real();
    ASSERT_NEAR(expectation, 192.0 * r.success_prob * (0.5 - r.singlet_fraction), 1e-10);
    ASSERT_EQ(r.verdict == Verdict::detected, expectation < 0.0);
  }
}

TEST(ghz, family_is_orthonormal) {
  std::vector<Ket> family;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) family.push_back(ghz_family(a, b, c));
    }
  }
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      ASSERT_NEAR(std::abs(inner(family[i], family[j])), i == j ? 1.0 : 0.0, 1e-15);
    }
  }
}

TEST(ghz, readout_maps_ghz_to_zeros) {
  const Ket out = netwit::apply(ghz_readout_unitary(), ghz_family(0, 0, 0));
  ASSERT_NEAR(std::abs(out[0]), 1.0, 1e-15);
}

TEST(ghz, network_reconstruction_and_proportionality) {
  const NetworkState n = ghz_network();
  const Witness w = ghz_witness();
  ASSERT_LE(reconstruct_witness(n, 0.5).max_abs_diff(0.125 * w.matrix().transpose()), 1e-13);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const DensityOperator rho = random_density(Dims(3, 2), seed);
    const DetectionReport r = detect_exact(rho, n, w);
    const double expectation = trace_of_product(rho.matrix(), w.matrix()).real();
    ASSERT_NEAR(expectation, 64.0 * r.success_prob * (0.5 - r.singlet_fraction), 1e-10);
  }
  const DensityOperator ghz(ComplexMatrix::projector(ghz_family(0, 0, 0), Dims(3, 2)));
  const DetectionReport r = detect_exact(ghz, n, w);
  ASSERT_EQ(r.verdict, Verdict::detected);
  ASSERT_NEAR(r.pair_readout, 0.125, 1e-14);
  ASSERT_NEAR(r.pair_readout_threshold, 1.0 / 16.0, 1e-14);
}
