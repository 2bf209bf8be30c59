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
#include <vector>

#include "netwit/rng.hpp"
#include "netwit/tensor.hpp"

namespace netwit {

/// F P00 + (1 - F)(1 - P00)/(d^2 - 1). Throws unless 0 <= F <= 1.
DensityOperator isotropic_state(std::size_t d, double fidelity);

/// sum_{s,t} p[s d + t] P_st. Throws unless p has d^2 non-negative entries summing to 1.
DensityOperator bell_diagonal_state(std::size_t d, const std::vector<double>& p);

/// Haar-random unit ket (normalised complex Gaussian vector).
Ket random_pure_state(std::size_t dim, Rng& rng);

/// G G^dagger / tr with G a square complex Gaussian matrix (full-rank Ginibre ensemble).
DensityOperator random_density(const Dims& dims, Rng& rng);
DensityOperator random_density(const Dims& dims, std::uint64_t seed);

/// Convex mixture of `terms` random product pure states on d x d.
DensityOperator random_separable(std::size_t d, std::size_t terms, std::uint64_t seed);

struct ChoiSearchOptions {
  std::size_t resolution = 40;
  std::uint64_t seed = 1;
  std::size_t refine_steps = 20000;
  unsigned threads = 0;  ///< 0 picks hardware concurrency
};

struct ChoiSearchResult {
  bool found;
  std::vector<double> p;          ///< Bell weights, index s*3 + t
  std::optional<DensityOperator> rho;
  double witness_expectation;     ///< tr[W_Choi rho]
  double min_pt_eigenvalue;
  std::size_t grid_points;
  std::size_t refine_accepted;
};

/// Searches Bell-diagonal qutrit states for one that is PPT (min eig of rho^Gamma
/// >= -1e-12) yet has tr[W_Choi rho] <= -1e-4. A grid over the slice
/// p00 = a, p01 = p02 = b, p1t = c, p2t = e is followed by random local moves
/// over all nine weights. The best PPT point is returned even when `found` is false.
ChoiSearchResult find_choi_detected_ppt(const ChoiSearchOptions& options = {});

}  // namespace netwit
