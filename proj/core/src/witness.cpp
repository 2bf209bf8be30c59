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

#include "netwit/witness.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "netwit/bell.hpp"
#include "netwit/rng.hpp"

namespace netwit {

namespace {

constexpr double kFloorTol = 1e-6;

Ket random_unit_ket(std::size_t dim, Rng& rng) {
  Ket v(dim);
  for (auto& z : v) z = rng.complex_normal();
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

// Operator on factor k obtained by sandwiching w between the other factors' kets.
ComplexMatrix conditioned_operator(const ComplexMatrix& w, const std::vector<Ket>& factors,
                                   std::size_t k) {
  const Dims& dims = w.dims();
  std::size_t stride_k = 1;
  for (std::size_t f = k + 1; f < dims.size(); ++f) stride_k *= dims[f];

  // Amplitudes of the other factors' product, indexed by full offset with digit k = 0.
  std::vector<std::pair<std::size_t, cplx>> rest{{0, cplx(1.0)}};
  std::size_t stride = w.side();
  for (std::size_t f = 0; f < dims.size(); ++f) {
    stride /= dims[f];
    if (f == k) continue;
    std::vector<std::pair<std::size_t, cplx>> next;
    next.reserve(rest.size() * dims[f]);
    for (const auto& [off, amp] : rest) {
      for (std::size_t digit = 0; digit < dims[f]; ++digit) {
        next.emplace_back(off + digit * stride, amp * factors[f][digit]);
      }
    }
    rest = std::move(next);
  }

  const std::size_t dk = dims[k];
  ComplexMatrix out({dk});
  for (std::size_t x = 0; x < dk; ++x) {
    for (std::size_t y = 0; y < dk; ++y) {
      cplx acc = 0.0;
      for (const auto& [oi, ai] : rest) {
        const std::size_t row = oi + x * stride_k;
        for (const auto& [oj, aj] : rest) acc += std::conj(ai) * aj * w(row, oj + y * stride_k);
      }
      out(x, y) = acc;
    }
  }
  return out;
}

double product_expectation(const ComplexMatrix& w, const std::vector<Ket>& factors) {
  Ket full = factors.front();
  for (std::size_t f = 1; f < factors.size(); ++f) full = kron(full, factors[f]);
  return overlap(full, w).real();
}

void check_eta(double eta, std::size_t d) {
  const double lo = 1.0 / static_cast<double>(d);
  if (!(eta >= lo - 1e-12 && eta < 1.0)) {
    throw std::invalid_argument("witness threshold eta must lie in [1/d, 1), got " +
                                std::to_string(eta));
  }
}

}  // namespace

std::string_view to_string(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::two_qubit_pt: return "two-qubit-PT";
    case WitnessFamily::decomposable: return "decomposable";
    case WitnessFamily::bell_diagonal: return "bell-diagonal";
    case WitnessFamily::reduction: return "reduction";
    case WitnessFamily::choi: return "choi";
    case WitnessFamily::breuer_hall: return "breuer-hall";
    case WitnessFamily::graph: return "graph";
  }
  return "unknown";
}

LambdaVec::LambdaVec(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("LambdaVec: need at least 2 entries");
  double total = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0)) throw std::invalid_argument("LambdaVec: entries must be non-negative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("LambdaVec: entries must sum to 1, got " + std::to_string(total));
  }
}

SeesawResult sep_floor_estimate(const ComplexMatrix& w, const SeesawOptions& options) {
  if (!w.is_hermitian(1e-8)) throw std::invalid_argument("sep_floor_estimate: W not Hermitian");
  const Dims& dims = w.dims();
  SeesawResult best{std::numeric_limits<double>::infinity(), {}};
  for (int r = 0; r < std::max(options.restarts, 1); ++r) {
    Rng rng(options.seed, static_cast<std::uint64_t>(r));
    std::vector<Ket> factors;
    for (std::size_t d : dims) factors.push_back(random_unit_ket(d, rng));
    double value = product_expectation(w, factors);
    for (int it = 0; it < options.iterations; ++it) {
      for (std::size_t k = 0; k < dims.size(); ++k) {
        const auto eig = hermitian_eigen(conditioned_operator(w, factors, k));
        for (std::size_t i = 0; i < dims[k]; ++i) factors[k][i] = eig.vectors(i, 0);
      }
      const double next = product_expectation(w, factors);
      const bool converged = std::abs(value - next) < options.tolerance;
      value = next;
      if (converged) break;
    }
    if (value < best.value) best = {value, factors};
  }
  return best;
}

SeesawResult sep_floor_estimate(const Witness& w, const SeesawOptions& options) {
  return sep_floor_estimate(w.matrix(), options);
}

Witness::Witness(ComplexMatrix mat, WitnessFamily family, double eta,
                 std::optional<LambdaVec> lambda)
    : mat_(std::move(mat)), family_(family), eta_(eta), lambda_(std::move(lambda)) {
  if (!mat_.is_hermitian(kStructuralTol)) {
    throw std::invalid_argument("Witness: matrix is not Hermitian");
  }
  check_eta(eta_, dim());
  if (min_eigenvalue(mat_) >= -kStructuralTol) {
    throw std::invalid_argument("Witness: no negative eigenvalue, detects nothing");
  }
  SeesawOptions quick;
  quick.restarts = 16;
  const double floor = sep_floor_estimate(mat_, quick).value;
  if (floor < -kFloorTol) {
    throw std::invalid_argument("Witness: negative on a product state (floor " +
                                std::to_string(floor) + ")");
  }
}

Witness two_qubit_pt_witness() {
  return Witness(partial_transpose(p00(2), {1}), WitnessFamily::two_qubit_pt, 0.5);
}

Witness decomposable_witness(const DensityOperator& q) {
  const Dims& dims = q.dims();
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw std::invalid_argument("decomposable_witness: Q must act on d x d");
  }
  return Witness(partial_transpose(q.matrix(), {1}), WitnessFamily::decomposable,
                 1.0 / static_cast<double>(dims[0]));
}

Witness flip_witness(std::size_t d) { return decomposable_witness(DensityOperator(p00(d))); }

CyclicCheck cyclic_inequality_check(const LambdaVec& lambda, std::size_t trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("cyclic_inequality_check: trials must be >= 1");
  const std::size_t d = lambda.size();
  const double bound = static_cast<double>(d);
  CyclicCheck result{true, -std::numeric_limits<double>::infinity(), 0.0, {}, 0};

  auto evaluate = [&](const std::vector<double>& t) {
    double lhs = 0.0;
    bool any = false;
    for (std::size_t j = 0; j < d; ++j) {
      const double num = t[j] * t[j];
      double den = 0.0;
      for (std::size_t s = 0; s < d; ++s) den += lambda[s] * t[(j + s) % d] * t[(j + s) % d];
      if (den == 0.0) {
        if (num == 0.0) continue;
        lhs = std::numeric_limits<double>::infinity();
        any = true;
        break;
      }
      lhs += num / den;
      any = true;
    }
    if (!any) return;
    ++result.evaluated;
    if (lhs > result.worst_lhs) {
      result.worst_lhs = lhs;
      result.worst_t = t;
    }
  };

  std::vector<double> t(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(t.begin(), t.end(), 0.0);
    t[i] = 1.0;
    evaluate(t);
    for (std::size_t j = i + 1; j < d; ++j) {
      t[j] = 1.0;
      evaluate(t);
      t[j] = 0.0;
    }
  }
  std::fill(t.begin(), t.end(), 1.0);
  evaluate(t);

  Rng rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    for (auto& x : t) x = rng.uniform();
    // every third sample probes the boundary of the orthant
    if (k % 3 == 2) t[static_cast<std::size_t>(rng.uniform() * static_cast<double>(d))] = 0.0;
    evaluate(t);
  }

  result.margin = bound - result.worst_lhs;
  result.pass = result.worst_lhs <= bound + 1e-9;
  return result;
}

Witness bell_diagonal_witness(const LambdaVec& lambda, const BellDiagonalOptions& options) {
  const std::size_t d = lambda.size();
  const auto check = cyclic_inequality_check(lambda, options.cyclic_trials, options.cyclic_seed);
  if (!check.pass) {
    throw std::invalid_argument("not a valid Bell-diagonal witness (cyclic inequality LHS " +
                                std::to_string(check.worst_lhs) + " > " + std::to_string(d) + ")");
  }
  ComplexMatrix w = -p00(d);
  for (std::size_t s = 0; s < d; ++s) {
    if (lambda[s] != 0.0) w += lambda[s] * pi_s(d, s);
  }
  return Witness(std::move(w), WitnessFamily::bell_diagonal, lambda[0], lambda);
}

Witness reduction_witness(std::size_t d) {
  if (d < 2) throw std::invalid_argument("reduction_witness: d must be >= 2");
  const LambdaVec uniform(std::vector<double>(d, 1.0 / static_cast<double>(d)));
  const Witness w = bell_diagonal_witness(uniform);
  return Witness(w.matrix(), WitnessFamily::reduction, w.eta(), uniform);
}

Witness choi_witness() {
  const LambdaVec lambda({2.0 / 3.0, 1.0 / 3.0, 0.0});
  const Witness w = bell_diagonal_witness(lambda);
  return Witness(w.matrix(), WitnessFamily::choi, w.eta(), lambda);
}

Witness breuer_hall_witness(std::size_t d) {
  if (d < 4 || d % 2 != 0) {
    throw std::invalid_argument("breuer_hall_witness: d must be even and >= 4");
  }
  const double inv_d = 1.0 / static_cast<double>(d);
  ComplexMatrix w = inv_d * (ComplexMatrix::identity({d, d}) - flip_prime(d)) - p00(d);
  return Witness(std::move(w), WitnessFamily::breuer_hall, inv_d);
}

}  // namespace netwit
