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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netwit/network.hpp"
#include "netwit/tensor.hpp"
#include "netwit/witness.hpp"

namespace netwit {

struct FilterResult {
  double success_prob;
  DensityOperator out;  ///< normalised output on the layer-3 sites
};

/// tr_12[rho_1 x N_23 P^(12)] where P^(12) projects every (X1, X2) pair onto
/// |phi_00>. Computed by index contraction in O(D^4), D = d^parties.
/// Not normalised: its trace is the post-selection probability.
ComplexMatrix filter_unnormalized(const ComplexMatrix& rho, const NetworkState& n);

/// Post-selected teleportation of rho through n. Throws
/// "post-selection probability vanishes" when the probability is <= 1e-14.
FilterResult filtering_channel(const DensityOperator& rho, const NetworkState& n);

/// <phi_00|sigma|phi_00> for sigma on d x d.
double singlet_fraction(const DensityOperator& sigma);
/// <target|sigma|target>.
double target_fraction(const ComplexMatrix& sigma, std::span<const cplx> target);

/// diag(G sigma G^dagger) for a readout unitary G, one entry per computational outcome.
std::vector<double> readout_probs(const ComplexMatrix& sigma, const ComplexMatrix& readout);
/// readout_probs with the Bell readout circuit; entry j*d + k is outcome (j, k).
std::vector<double> measurement_circuit_probs(const DensityOperator& sigma);

/// Joint distribution of the Bell measurements on all (X1, X2) pairs. Index
/// sum_p (s_p d + t_p) (d^2)^(m-1-p) over parties p; index 0 is the
/// post-selected outcome. Sums to one.
std::vector<double> bell_outcome_distribution(const DensityOperator& rho, const NetworkState& n);

enum class Verdict { detected, not_detected, inconclusive };
std::string_view to_string(Verdict v);

struct ShotSummary {
  std::uint64_t n_total;
  std::uint64_t n_postselected;
  std::uint64_t n_target;  ///< post-selected shots whose readout was all zeros
  double estimate;         ///< n_target / n_postselected (0 when nothing was kept)
  double ci_low;
  double ci_high;
  double postselection_rate;
  std::uint64_t seed;
};

struct DetectionReport {
  std::string family;
  std::size_t parties;
  std::size_t local_dim;
  double success_prob;
  double singlet_fraction;      ///< overlap of the filtered state with the target
  double eta;
  Verdict verdict;
  double witness_expectation;   ///< tr[rho W] computed directly
  double margin;                ///< singlet_fraction - eta
  /// d^m * success_prob * fraction: the readout when each pair projector is
  /// the unnormalised |sum_j jj><sum_j jj|. Compared against pair_readout_threshold.
  double pair_readout;
  double pair_readout_threshold;
  double recon_constant;
  std::optional<ShotSummary> shots;
};

/// Runs the filter and compares the fraction with eta (strict >). Cross-checks
/// that n realises W (throws std::invalid_argument otherwise) and that the
/// verdict matches tr[rho W] < 0 outside |fraction - eta| <= 1e-9 (throws
/// std::logic_error otherwise).
DetectionReport detect_exact(const DensityOperator& rho, const NetworkState& n, const Witness& w);

struct ShotOptions {
  std::uint64_t shots = 100000;
  std::uint64_t seed = 1;
  std::uint64_t batch_size = 1 << 16;
  unsigned threads = 0;  ///< 0 picks hardware concurrency
};

/// Finite-shot emulation. Each shot samples the joint Bell outcome; on
/// post-selection it samples the readout circuit. Batches use independent
/// substreams Rng(seed, batch) and counts are summed, so the result depends
/// only on (shots, seed, batch_size). Verdict compares the estimate with eta;
/// zero post-selected shots gives Verdict::inconclusive.
DetectionReport detect_shots(const DensityOperator& rho, const NetworkState& n, const Witness& w,
                             const ShotOptions& options);

/// 95% Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n);

}  // namespace netwit
