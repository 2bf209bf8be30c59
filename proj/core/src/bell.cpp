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

#include "netwit/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace netwit {

namespace {

cplx root_of_unity(std::size_t d, std::size_t power) {
  // Reduce first so large powers stay exact in the argument.
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % d) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

void require_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
}

}  // namespace

BellIndex::BellIndex(std::size_t d_, std::size_t s_, std::size_t t_) : d(d_), s(s_), t(t_) {
  require_dim(d);
  if (s >= d || t >= d) {
    throw std::invalid_argument("BellIndex: s and t must lie in 0..d-1 (d=" + std::to_string(d) +
                                ", s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
  }
}

Ket bell_state(const BellIndex& idx) {
  const std::size_t d = idx.d;
  Ket v(d * d, cplx(0.0));
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    v[j * d + (j + idx.s) % d] = amp * root_of_unity(d, idx.t * j);
  }
  return v;
}

ComplexMatrix bell_projector(const BellIndex& idx) {
  return ComplexMatrix::projector(bell_state(idx), {idx.d, idx.d});
}

Ket phi_plus(std::size_t d) { return bell_state(BellIndex(d, 0, 0)); }

ComplexMatrix p00(std::size_t d) { return bell_projector(BellIndex(d, 0, 0)); }

ComplexMatrix pi_s(std::size_t d, std::size_t s) {
  BellIndex check(d, s, 0);
  ComplexMatrix out({d, d});
  for (std::size_t t = 0; t < d; ++t) out += bell_projector(BellIndex(d, s, t));
  return out;
}

ComplexMatrix flip_operator(std::size_t d) {
  require_dim(d);
  ComplexMatrix f({d, d});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
  }
  return f;
}

SymAntisym sym_antisym(std::size_t d) {
  const ComplexMatrix f = flip_operator(d);
  const ComplexMatrix id = ComplexMatrix::identity({d, d});
  return {0.5 * (id + f), 0.5 * (id - f)};
}

ComplexMatrix skew_unitary(std::size_t d) {
  require_dim(d);
  if (d % 2 != 0) {
    throw std::invalid_argument("skew-symmetric unitary requires even dimension");
  }
  ComplexMatrix u({d});
  for (std::size_t i = 0; i < d; i += 2) {
    u(i, i + 1) = 1.0;
    u(i + 1, i) = -1.0;
  }
  return u;
}

ComplexMatrix flip_prime(std::size_t d) {
  const ComplexMatrix u = skew_unitary(d);
  const ComplexMatrix left = kron(ComplexMatrix::identity({d}), u);
  return left * flip_operator(d) * left.adjoint();
}

ComplexMatrix shift_operator(std::size_t d) {
  require_dim(d);
  ComplexMatrix x({d});
  for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

ComplexMatrix clock_operator(std::size_t d) {
  require_dim(d);
  ComplexMatrix z({d});
  for (std::size_t j = 0; j < d; ++j) z(j, j) = root_of_unity(d, j);
  return z;
}

}  // namespace netwit
