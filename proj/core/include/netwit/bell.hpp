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

#include <cstddef>

#include "netwit/tensor.hpp"

namespace netwit {

/// Label (s, t) of a generalised Bell state in dimension d.
struct BellIndex {
  std::size_t d;
  std::size_t s;
  std::size_t t;

  /// Throws std::invalid_argument unless d >= 2 and s, t < d.
  BellIndex(std::size_t d, std::size_t s, std::size_t t);
};

/// |phi_st> = d^{-1/2} sum_j w^{t j} |j>|j + s mod d>, w = exp(2 pi i / d).
Ket bell_state(const BellIndex& idx);
ComplexMatrix bell_projector(const BellIndex& idx);

/// |phi_00>, the maximally entangled state.
Ket phi_plus(std::size_t d);
ComplexMatrix p00(std::size_t d);

/// Pi_s = sum_t P_st, rank d.
ComplexMatrix pi_s(std::size_t d, std::size_t s);

/// Swap operator F|i>|j> = |j>|i>.
ComplexMatrix flip_operator(std::size_t d);

struct SymAntisym {
  ComplexMatrix sym;      ///< (1 + F) / 2
  ComplexMatrix antisym;  ///< (1 - F) / 2
};
SymAntisym sym_antisym(std::size_t d);

/// Block-diagonal [[0, 1], [-1, 0]] unitary with U^T = -U. Requires even d.
ComplexMatrix skew_unitary(std::size_t d);
/// (1 x U) F (1 x U^dagger) with U = skew_unitary(d).
ComplexMatrix flip_prime(std::size_t d);

/// Single-qudit shift X|j> = |j+1> and clock Z|j> = w^j |j>.
ComplexMatrix shift_operator(std::size_t d);
ComplexMatrix clock_operator(std::size_t d);

}  // namespace netwit
