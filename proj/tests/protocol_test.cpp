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

#include "netwit/protocol.hpp"

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "netwit/bell.hpp"
#include "netwit/graph.hpp"
#include "netwit/states.hpp"
#include "test_util.hpp"

using namespace netwit;

namespace {

struct Case {
  NetworkState network;
  Witness witness;
};

std::vector<Case> bipartite_cases() {
  std::vector<Case> out;
  out.push_back({two_qubit_network(), two_qubit_pt_witness()});
  out.push_back({flip_network(3), flip_witness(3)});
  out.push_back({reduction_network(3), reduction_witness(3)});
  out.push_back({choi_network(), choi_witness()});
  return out;
}

// tr[(rho x N) P] with P the Bell projector of each party's outcome, in the full space.
double full_space_outcome(const ComplexMatrix& rho, const NetworkState& n,
                          const std::vector<BellIndex>& outcome) {
  const std::size_t m = n.parties();
  const Dims full(3 * m, n.local_dim());
  ComplexMatrix projector = ComplexMatrix::identity(full);
  for (std::size_t p = 0; p < m; ++p) {
    projector = projector * embed(bell_projector(outcome[p]), {p, m + p}, full);
  }
  return trace_of_product(kron(rho, n.state().matrix()), projector).real();
}

}  // namespace

TEST(filter, matches_full_space_contraction) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const NetworkState n = two_qubit_network();
    const DensityOperator rho = random_density({2, 2}, seed);
    const ComplexMatrix oracle = netwit::testing::full_space_filter(rho.matrix(), n);
    ASSERT_LE(filter_unnormalized(rho.matrix(), n).max_abs_diff(oracle), 1e-14);
  }
  const NetworkState f3 = flip_network(3);
  const DensityOperator rho3 = random_density({3, 3}, 7);
  ASSERT_LE(filter_unnormalized(rho3.matrix(), f3).max_abs_diff(netwit::testing::full_space_filter(rho3.matrix(), f3)),
            1e-14);
}

TEST(filter, matches_full_space_contraction_ghz) {
  const NetworkState n = ghz_network();
  const DensityOperator rho = random_density({2, 2, 2}, 11);
  ASSERT_LE(filter_unnormalized(rho.matrix(), n).max_abs_diff(netwit::testing::full_space_filter(rho.matrix(), n)),
            1e-14);
}

TEST(filter, maximally_mixed_input_probability) {
  for (std::size_t d : {2u, 3u}) {
    const double dd = static_cast<double>(d);
    const DensityOperator rho(ComplexMatrix::identity({d, d}) * (1.0 / (dd * dd)));
    ASSERT_NEAR(filtering_channel(rho, flip_network(d)).success_prob, 1.0 / std::pow(dd, 4), 1e-15);
  }
}

TEST(filter, product_network_outputs_layer3_state) {
  Rng rng(5);
  const DensityOperator tau2 = random_density({2, 2}, rng);
  const DensityOperator tau3 = random_density({2, 2}, rng);
  const NetworkState n =
      bipartite_network("product", 2, {{1.0, tau2.matrix(), tau3.matrix()}}, 0.5, 1.0);
  const DensityOperator rho = random_density({2, 2}, rng);
  ASSERT_LE(filtering_channel(rho, n).out.matrix().max_abs_diff(tau3.matrix()), 1e-12);
}

TEST(filter, vanishing_probability_throws) {
  // rho = P00 meets a layer-2 state orthogonal to the conjugate projector
  const ComplexMatrix p = p00(2);
  const ComplexMatrix q = ComplexMatrix::identity({2, 2}) - p;
  const NetworkState n = bipartite_network("orth", 2, {{1.0, (1.0 / 3.0) * q, p}}, 0.5, 1.0);
  ASSERT_THROW(filtering_channel(DensityOperator(p), n), std::invalid_argument);
}

TEST(measurement_circuit, deterministic_on_bell_states) {
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        const auto probs = measurement_circuit_probs(DensityOperator(bell_projector(BellIndex(d, s, t))));
        ASSERT_NEAR(probs[t * d + s], 1.0, 1e-13);
      }
    }
  }
}

TEST(measurement_circuit, uniform_on_maximally_mixed) {
  const auto probs = measurement_circuit_probs(DensityOperator((1.0 / 9.0) * ComplexMatrix::identity({3, 3})));
  for (double p : probs) ASSERT_NEAR(p, 1.0 / 9.0, 1e-15);
}

TEST(measurement_circuit, zero_outcome_is_singlet_fraction) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DensityOperator sigma = random_density({3, 3}, seed);
    ASSERT_NEAR(measurement_circuit_probs(sigma)[0], overlap(phi_plus(3), sigma.matrix()).real(), 1e-13);
    ASSERT_NEAR(singlet_fraction(sigma), overlap(phi_plus(3), sigma.matrix()).real(), 1e-13);
  }
}

TEST(bell_outcomes, sum_to_one_and_zero_is_postselection) {
  for (const auto& c : bipartite_cases()) {
    const std::size_t d = c.network.local_dim();
    const DensityOperator rho = random_density({d, d}, 13);
    const auto probs = bell_outcome_distribution(rho, c.network);
    ASSERT_EQ(probs.size(), d * d * d * d);
    ASSERT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-12);
    for (double p : probs) ASSERT_GE(p, -1e-15);
    ASSERT_NEAR(probs[0], filtering_channel(rho, c.network).success_prob, 1e-14);
  }
}

TEST(bell_outcomes, match_full_space_projectors) {
  const NetworkState n = two_qubit_network();
  const DensityOperator rho = random_density({2, 2}, 21);
  const auto probs = bell_outcome_distribution(rho, n);
  // outcome index is (s_A d + t_A) d^2 + (s_B d + t_B)
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const std::vector<BellIndex> outcome{BellIndex(2, a / 2, a % 2), BellIndex(2, b / 2, b % 2)};
      ASSERT_NEAR(probs[a * 4 + b], full_space_outcome(rho.matrix(), n, outcome), 1e-13);
    }
  }
}

TEST(bell_outcomes, ghz_network_sums_to_one) {
  const auto probs = bell_outcome_distribution(random_density({2, 2, 2}, 3), ghz_network());
  ASSERT_EQ(probs.size(), 64u);
  ASSERT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-12);
}

TEST(detect_exact, singlet_on_two_qubit_network) {
  const DensityOperator psi(bell_projector(BellIndex(2, 1, 1)));
  const DetectionReport r = detect_exact(psi, two_qubit_network(), two_qubit_pt_witness());
  ASSERT_EQ(r.verdict, Verdict::detected);
  ASSERT_NEAR(r.singlet_fraction, 1.0, 1e-12);
  ASSERT_NEAR(r.success_prob, 1.0 / 16.0, 1e-15);
  ASSERT_NEAR(r.pair_readout, 0.25, 1e-14);
  ASSERT_NEAR(r.pair_readout_threshold, 0.125, 1e-14);
  ASSERT_NEAR(r.witness_expectation, -0.5, 1e-14);
}

TEST(detect_exact, maximally_mixed_not_detected) {
  const DensityOperator mixed(0.25 * ComplexMatrix::identity({2, 2}));
  const DetectionReport r = detect_exact(mixed, two_qubit_network(), two_qubit_pt_witness());
  ASSERT_EQ(r.verdict, Verdict::not_detected);
  ASSERT_NEAR(r.witness_expectation, 0.25, 1e-14);
  ASSERT_NEAR(r.pair_readout, 1.0 / 16.0, 1e-14);
  ASSERT_NEAR(r.pair_readout_threshold, 0.125, 1e-14);
}

TEST(detect_exact, product_input_not_detected) {
  const LambdaVec lambda({2.0 / 3.0, 1.0 / 3.0, 0.0});
  const NetworkState n = pbd_network(lambda);
  Ket zero(3);
  zero[0] = 1.0;
  const ComplexMatrix p0 = ComplexMatrix::projector(zero, {3});
  const DensityOperator sep(kron(p0, p0));
  const DetectionReport r = detect_exact(sep, n, bell_diagonal_witness(lambda));
  ASSERT_NE(r.verdict, Verdict::detected);
  ASSERT_GE(r.witness_expectation, -1e-12);
}

TEST(detect_exact, rejects_mismatched_witness) {
  const DensityOperator rho = random_density({3, 3}, 1);
  ASSERT_THROW(detect_exact(rho, flip_network(3), reduction_witness(3)), std::invalid_argument);
}

TEST(detect_exact, biconditional_on_random_states) {
  for (const auto& c : bipartite_cases()) {
    const std::size_t d = c.network.local_dim();
    const double big_d = static_cast<double>(d * d);
    const EigenDecomposition eig = hermitian_eigen(c.witness.matrix());
    Ket lowest(eig.values.size());
    for (std::size_t i = 0; i < lowest.size(); ++i) lowest[i] = eig.vectors(i, 0);
    const ComplexMatrix negative = ComplexMatrix::projector(lowest, {d, d});
    int detected = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      // mix with the most negative eigenvector of W so both verdicts occur
      const DensityOperator base = random_density({d, d}, seed);
      const double mix = static_cast<double>(seed % 5) / 5.0;
      const DensityOperator rho((1.0 - mix) * base.matrix() + mix * negative);
      const DetectionReport r = detect_exact(rho, c.network, c.witness);
      const double expectation = trace_of_product(rho.matrix(), c.witness.matrix()).real();
      ASSERT_NEAR(r.witness_expectation, expectation, 1e-12);
      ASSERT_NEAR(expectation,
                  big_d / r.recon_constant * r.success_prob * (r.eta - r.singlet_fraction), 1e-10);
      ASSERT_EQ(r.verdict == Verdict::detected, expectation < 0.0) << c.network.family();
      detected += r.verdict == Verdict::detected;
    }
    ASSERT_GT(detected, 0) << c.network.family();
    ASSERT_LT(detected, 200) << c.network.family();
  }
}

TEST(wilson, known_values) {
  const auto [lo, hi] = wilson_interval(5, 10);
  ASSERT_NEAR(lo, 0.2366, 1e-4);
  ASSERT_NEAR(hi, 0.7634, 1e-4);
  const auto [lo0, hi0] = wilson_interval(0, 10);
  ASSERT_DOUBLE_EQ(lo0, 0.0);
  ASSERT_NEAR(hi0, 0.2775, 1e-4);
}

TEST(detect_shots, deterministic_and_thread_independent) {
  const DensityOperator rho = isotropic_state(2, 0.8);
  ShotOptions a;
  a.shots = 50000;
  a.seed = 42;
  a.batch_size = 4096;
  a.threads = 1;
  ShotOptions b = a;
  b.threads = 4;
  const auto ra = detect_shots(rho, two_qubit_network(), two_qubit_pt_witness(), a);
  const auto rb = detect_shots(rho, two_qubit_network(), two_qubit_pt_witness(), b);
  ASSERT_EQ(ra.shots->n_postselected, rb.shots->n_postselected);
  ASSERT_EQ(ra.shots->n_target, rb.shots->n_target);
  ASSERT_EQ(ra.shots->seed, 42u);
  ASSERT_EQ(ra.shots->n_total, 50000u);
}

TEST(detect_shots, single_shot_can_be_inconclusive) {
  const DensityOperator psi(bell_projector(BellIndex(2, 1, 1)));
  ShotOptions opts;
  opts.shots = 1;
  int inconclusive = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    opts.seed = seed;
    const auto r = detect_shots(psi, two_qubit_network(), two_qubit_pt_witness(), opts);
    ASSERT_EQ(r.verdict == Verdict::inconclusive, r.shots->n_postselected == 0);
    inconclusive += r.verdict == Verdict::inconclusive;
  }
  ASSERT_GT(inconclusive, 0);
}

TEST(detect_shots, estimate_is_unbiased) {
  const DensityOperator rho = isotropic_state(2, 0.7);
  const NetworkState n = two_qubit_network();
  const DetectionReport exact = detect_exact(rho, n, two_qubit_pt_witness());
  ShotOptions opts;
  opts.shots = 10000;
  double sum = 0.0;
  double rate = 0.0;
  int covered = 0;
  const int runs = 50;
  for (int seed = 1; seed <= runs; ++seed) {
    opts.seed = static_cast<std::uint64_t>(seed);
    const auto r = detect_shots(rho, n, two_qubit_pt_witness(), opts);
    sum += r.shots->estimate;
    rate += r.shots->postselection_rate;
    covered += r.shots->ci_low <= exact.singlet_fraction && exact.singlet_fraction <= r.shots->ci_high;
  }
  const double f = exact.singlet_fraction;
  const double p = exact.success_prob;
  const double se_f = std::sqrt(f * (1.0 - f) / (10000.0 * p));
  const double se_p = std::sqrt(p * (1.0 - p) / 10000.0);
  ASSERT_NEAR(sum / runs, f, 4.0 * se_f / std::sqrt(runs));
  ASSERT_NEAR(rate / runs, p, 4.0 * se_p / std::sqrt(runs));
  ASSERT_GE(covered, 42);
}
