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
#include <string_view>
#include <vector>

#include "netwit/tensor.hpp"

namespace netwit {

enum class WitnessFamily {
  two_qubit_pt,
  decomposable,
  bell_diagonal,
  reduction,
  choi,
  breuer_hall,
  graph,
};

std::string_view to_string(WitnessFamily family);

/// Non-negative weights lambda_0..lambda_{d-1} summing to one.
class LambdaVec {
 public:
  explicit LambdaVec(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t s) const { return values_[s]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

struct SeesawOptions {
  int restarts = 64;
  int iterations = 200;
  double tolerance = 1e-10;
  std::uint64_t seed = 0x5eedULL;
};

struct SeesawResult {
  double value;
  std::vector<Ket> factors;  ///< the minimising product state, one ket per tensor factor
};

/// Seesaw minimisation of <a1 x a2 x ...|W|a1 x a2 x ...> over unit product kets,
/// one ket per tensor factor of `w`. Alternately replaces each factor with the
/// lowest eigenvector of the operator conditioned on the others. Returns the
/// best value over all restarts; deterministic for a given seed.
SeesawResult sep_floor_estimate(const ComplexMatrix& w, const SeesawOptions& options = {});

/// An observable that is non-negative on product states and negative somewhere.
///
/// Construction checks Hermiticity, the presence of a negative eigenvalue and
/// a seesaw floor >= -1e-6 (16 restarts); failures throw std::invalid_argument.
class Witness {
 public:
  Witness(ComplexMatrix mat, WitnessFamily family, double eta,
          std::optional<LambdaVec> lambda = std::nullopt);

  const ComplexMatrix& matrix() const { return mat_; }
  WitnessFamily family() const { return family_; }
  double eta() const { return eta_; }
  const std::optional<LambdaVec>& lambda() const { return lambda_; }
  /// Local dimension of the first factor.
  std::size_t dim() const { return mat_.dims().front(); }

 private:
  ComplexMatrix mat_;
  WitnessFamily family_;
  double eta_;
  std::optional<LambdaVec> lambda_;
};

SeesawResult sep_floor_estimate(const Witness& w, const SeesawOptions& options = {});

/// |phi+><phi+|^Gamma = 1/2 - |psi-><psi-|, threshold 1/2.
Witness two_qubit_pt_witness();

/// Q^Gamma (transpose on the second factor) for a state Q on d x d; threshold 1/d.
Witness decomposable_witness(const DensityOperator& q);

/// F / d = P00^Gamma.
Witness flip_witness(std::size_t d);

struct CyclicCheck {
  bool pass;
  double worst_lhs;          ///< largest value of sum_j t_j^2 / sum_s lambda_s t_{j+s}^2 seen
  double margin;             ///< d - worst_lhs
  std::vector<double> worst_t;
  std::size_t evaluated;
};

/// Randomised falsifier for the cyclic inequalities. Evaluates corner cases
/// (basis vectors, pairs, all-ones) and `trials` random non-negative vectors.
/// A term with zero denominator counts as +infinity unless its numerator is
/// also zero, in which case it is skipped.
CyclicCheck cyclic_inequality_check(const LambdaVec& lambda, std::size_t trials,
                                    std::uint64_t seed);

struct BellDiagonalOptions {
  std::size_t cyclic_trials = 10000;
  std::uint64_t cyclic_seed = 7;
};

/// sum_s lambda_s Pi_s - P00 with threshold lambda_0. Throws when the cyclic
/// check fails ("not a valid Bell-diagonal witness").
Witness bell_diagonal_witness(const LambdaVec& lambda, const BellDiagonalOptions& options = {});
/// 1/d - P00, the uniform-lambda case.
Witness reduction_witness(std::size_t d);
/// lambda = (2/3, 1/3, 0) at d = 3.
Witness choi_witness();

/// (1/d)(1 - F') - P00 for even d >= 4, threshold 1/d.
Witness breuer_hall_witness(std::size_t d);

}  // namespace netwit
