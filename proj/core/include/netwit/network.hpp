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

#include <optional>
#include <string>
#include <vector>

#include "netwit/tensor.hpp"
#include "netwit/witness.hpp"

namespace netwit {

/// weight * (layer2 x layer3); layer2 lives on the receiving copy of the
/// parties (A2 B2 ...), layer3 on the output copy (A3 B3 ...).
struct ProductTerm {
  double weight;
  ComplexMatrix layer2;
  ComplexMatrix layer3;
};

/// A resource state prepared on two copies of `parties` qudits, ordered
/// (A2, B2, ..., A3, B3, ...). After Bell post-selection it teleports the
/// tested state onto the output copy, where the overlap with `target()` is
/// compared against eta.
///
/// Invariants: the state is a valid density operator equal to the sum of its
/// product terms (hence separable across the layer-2 : layer-3 cut),
/// recon_constant > 0, and readout() is unitary with readout()|target> = |0...0>.
class NetworkState {
 public:
  NetworkState(std::string family, std::size_t parties, std::size_t local_dim,
               std::vector<ProductTerm> terms, double eta, double recon_constant, Ket target,
               ComplexMatrix readout);

  const std::string& family() const { return family_; }
  std::size_t parties() const { return parties_; }
  std::size_t local_dim() const { return local_dim_; }
  const DensityOperator& state() const { return state_; }
  const std::vector<ProductTerm>& terms() const { return terms_; }
  double eta() const { return eta_; }
  double recon_constant() const { return recon_constant_; }
  const Ket& target() const { return target_; }
  const ComplexMatrix& readout() const { return readout_; }

  /// Dims of one layer, i.e. of the tested state.
  Dims layer_dims() const { return Dims(parties_, local_dim_); }

  /// Re-checks the convex product decomposition: weights >= 0, PSD factors,
  /// and sum of terms equal to the state within `tol`.
  bool structurally_separable(double tol = kStructuralTol) const;

 private:
  std::string family_;
  std::size_t parties_;
  std::size_t local_dim_;
  std::vector<ProductTerm> terms_;
  DensityOperator state_;
  double eta_;
  double recon_constant_;
  Ket target_;
  ComplexMatrix readout_;
};

/// (H^dagger x 1) CNOT^dagger: maps |phi_st> to |t, s>, in particular |phi_00> to |00>.
ComplexMatrix bell_readout_unitary(std::size_t d);

/// Generic bipartite network with target |phi_00> and the Bell readout circuit.
NetworkState bipartite_network(std::string family, std::size_t d, std::vector<ProductTerm> terms,
                               double eta, double recon_constant);

/// 1/4 psi- x phi+ + 1/12 (1 - psi-) x (1 - phi+), eta = 1/2.
NetworkState two_qubit_network();

/// Two-term network for W = Q^Gamma with eta = 1/d. The layer-2 operators are
/// built from W^T so that the reconstruction returns recon_constant * W^T.
NetworkState decomposable_network(const DensityOperator& q);

/// The U U V V*-invariant network for W = F/d.
NetworkState flip_network(std::size_t d);

/// Paired Bell-diagonal state sum_s lambda_s / d sum_t P_st x P_st, eta = lambda_0.
NetworkState pbd_network(const LambdaVec& lambda);
NetworkState reduction_network(std::size_t d);
NetworkState smolin_network();
NetworkState choi_network();

struct BreuerHallCoefficients {
  double c0;
  double c1;
  double c2;
};
/// c0 = (2d^2-2d)/D, c1 = (d+1)/D, c2 = (d-1)^2/D with D = 3d^2-3d+2.
BreuerHallCoefficients breuer_hall_coefficients(std::size_t d);
NetworkState bh_network(std::size_t d);

/// tr over the output layer of N (eta 1 - |target><target|).
ComplexMatrix reconstruct_witness(const NetworkState& n, double eta);

/// One piece of W^T = sum_j a_j omega_j with omega_j >= 0, paired with the
/// output-layer operator pi_j (PSD, unit trace).
struct DecompositionTerm {
  double a;
  ComplexMatrix omega;
  ComplexMatrix pi;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;  ///< omega normalised to unit trace
  std::vector<double> c;                 ///< mixture weights, sum to 1
  double k;                              ///< a_j = k c_j (eta - <phi_00|pi_j|phi_00>)
  NetworkState network;
};

/// Solves for the mixture weights of N = sum_j c_j omega_j x pi_j given the
/// pieces of W^T. Each omega_j is normalised internally (its trace moves into a_j).
/// Throws std::invalid_argument naming the first term whose sign cannot be realised.
Decomposition solve_decomposition(std::vector<DecompositionTerm> pieces, double eta,
                                  std::size_t d);

/// Default split: W^T into its positive and negative spectral parts, paired with
/// (1 - P00)/(d^2 - 1) and P00 respectively, unless `pis` overrides the pair
/// (positive part first).
Decomposition solve_decomposition(const Witness& w, double eta,
                                  std::optional<std::vector<ComplexMatrix>> pis = std::nullopt);

struct CutReport {
  std::vector<std::size_t> side;  ///< factors on the transposed side
  std::string label;              ///< e.g. "A2A3:B2B3"
  double min_eigenvalue;
};

/// Minimum eigenvalue of the partial transpose across every bipartition of the
/// factors (2^{k-1} - 1 cuts for k factors). Labels use `names` when given.
std::vector<CutReport> ppt_report(const ComplexMatrix& state,
                                  const std::vector<std::string>& names = {});
std::vector<CutReport> ppt_report(const NetworkState& n);

}  // namespace netwit
