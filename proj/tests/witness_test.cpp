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

#include "gtest/gtest.h"
#include "netwit/bell.hpp"
#include "netwit/states.hpp"

using namespace netwit;

TEST(lambda_vec, validation) {
  ASSERT_THROW(LambdaVec({1.0}), std::invalid_argument);
  ASSERT_THROW(LambdaVec({0.5, 0.6}), std::invalid_argument);
  ASSERT_THROW(LambdaVec({1.2, -0.2}), std::invalid_argument);
  ASSERT_NO_THROW(LambdaVec({2.0 / 3.0, 1.0 / 3.0, 0.0}));
}

TEST(witness, two_qubit_is_half_minus_singlet) {
  const Witness w = two_qubit_pt_witness();
  const ComplexMatrix expected =
      0.5 * ComplexMatrix::identity({2, 2}) - bell_projector(BellIndex(2, 1, 1));
  ASSERT_LE(w.matrix().max_abs_diff(expected), 1e-15);
  ASSERT_EQ(w.eta(), 0.5);
  ASSERT_NEAR(trace_of_product(bell_projector(BellIndex(2, 1, 1)), w.matrix()).real(), -0.5, 1e-15);
}

TEST(witness, rejects_positive_operator) {
  ASSERT_THROW(Witness(ComplexMatrix::identity({2, 2}), WitnessFamily::decomposable, 0.5),
               std::invalid_argument);
}

TEST(witness, rejects_non_hermitian) {
  ComplexMatrix m = -p00(2);
  m(0, 1) = cplx(0.0, 1.0);
  ASSERT_THROW(Witness(m, WitnessFamily::decomposable, 0.5), std::invalid_argument);
}

TEST(witness, rejects_non_witness_by_seesaw) {
  ASSERT_THROW(Witness(-p00(3), WitnessFamily::decomposable, 1.0 / 3.0), std::invalid_argument);
}

TEST(witness, rejects_eta_out_of_range) {
  ASSERT_THROW(Witness(flip_witness(3).matrix(), WitnessFamily::decomposable, 0.2),
               std::invalid_argument);
  ASSERT_THROW(Witness(flip_witness(3).matrix(), WitnessFamily::decomposable, 1.0),
               std::invalid_argument);
}

TEST(seesaw, non_witness_floor_reaches_minus_one_over_d) {
  for (std::size_t d : {2u, 3u}) {
    const double floor = sep_floor_estimate(-p00(d)).value;
    ASSERT_LE(floor, -1.0 / static_cast<double>(d) + 1e-6);
    ASSERT_GE(floor, -1.0 / static_cast<double>(d) - 1e-9);
  }
}

TEST(seesaw, is_deterministic_for_a_seed) {
  SeesawOptions opts;
  opts.restarts = 4;
  const auto a = sep_floor_estimate(choi_witness(), opts);
  const auto b = sep_floor_estimate(choi_witness(), opts);
  ASSERT_EQ(a.value, b.value);
}

TEST(seesaw, multipartite_product_minimum) {
  // -|000><000| on three qubits has product minimum -1
  ComplexMatrix w({2, 2, 2});
  w(0, 0) = -1.0;
  ASSERT_NEAR(sep_floor_estimate(w).value, -1.0, 1e-9);
}

TEST(witness, decomposable_is_partial_transpose) {
  Rng rng(3);
  const DensityOperator q(ComplexMatrix::projector(random_pure_state(9, rng), {3, 3}));
  const Witness w = decomposable_witness(q);
  ASSERT_LE(w.matrix().max_abs_diff(partial_transpose(q.matrix(), {1})), 1e-15);
  ASSERT_NEAR(w.eta(), 1.0 / 3.0, 1e-15);
}

TEST(witness, flip_is_f_over_d) {
  const Witness w = flip_witness(3);
  ASSERT_LE(w.matrix().max_abs_diff((1.0 / 3.0) * flip_operator(3)), 1e-15);
}

TEST(cyclic, choi_lambda_passes) {
  const auto check = cyclic_inequality_check(LambdaVec({2.0 / 3.0, 1.0 / 3.0, 0.0}), 10000, 7);
  ASSERT_TRUE(check.pass);
  ASSERT_GE(check.margin, -1e-9);
  ASSERT_GT(check.evaluated, 10000u);
}

TEST(cyclic, invalid_lambda_fails) {
  const auto check = cyclic_inequality_check(LambdaVec({0.0, 1.0, 0.0}), 1000, 7);
  ASSERT_FALSE(check.pass);
}

TEST(cyclic, uniform_lambda_is_tight_at_all_ones) {
  const auto check = cyclic_inequality_check(LambdaVec({1.0 / 3, 1.0 / 3, 1.0 / 3}), 1000, 1);
  ASSERT_TRUE(check.pass);
  ASSERT_NEAR(check.worst_lhs, 3.0, 1e-9);
}

TEST(witness, bell_diagonal_expectation_formula) {
  // tr[W(lambda) P_st] = lambda_s - delta_{s0} delta_{t0}
  const LambdaVec lambda({0.5, 0.3, 0.2});
  const Witness w = bell_diagonal_witness(lambda);
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t t = 0; t < 3; ++t) {
      const double expected = lambda[s] - (s == 0 && t == 0 ? 1.0 : 0.0);
      ASSERT_NEAR(trace_of_product(bell_projector(BellIndex(3, s, t)), w.matrix()).real(),
                  expected, 1e-14);
    }
  }
}

TEST(witness, bell_diagonal_rejects_invalid_lambda) {
  ASSERT_THROW(bell_diagonal_witness(LambdaVec({0.0, 1.0, 0.0})), std::invalid_argument);
}

TEST(witness, reduction_is_one_over_d_minus_p00) {
  for (std::size_t d : {2u, 3u}) {
    const Witness w = reduction_witness(d);
    const ComplexMatrix expected =
        (1.0 / static_cast<double>(d)) * ComplexMatrix::identity({d, d}) - p00(d);
    ASSERT_LE(w.matrix().max_abs_diff(expected), 1e-14);
    ASSERT_EQ(w.family(), WitnessFamily::reduction);
  }
}

TEST(witness, choi_metadata) {
  const Witness w = choi_witness();
  ASSERT_EQ(w.family(), WitnessFamily::choi);
  ASSERT_NEAR(w.eta(), 2.0 / 3.0, 1e-15);
  ASSERT_TRUE(w.lambda().has_value());
}

TEST(witness, breuer_hall_trace_and_negativity) {
  const Witness w = breuer_hall_witness(4);
  // tr = (1/d)(d^2 - tr F') - 1 = (16 - 4)/4 - 1
  ASSERT_NEAR(w.matrix().trace().real(), 2.0, 1e-12);
  ASSERT_NEAR(overlap(phi_plus(4), w.matrix()).real(), 2.0 / 4.0 - 1.0, 1e-12);
  ASSERT_THROW(breuer_hall_witness(3), std::invalid_argument);
  ASSERT_THROW(breuer_hall_witness(2), std::invalid_argument);
}

TEST(witness, builtin_floors_are_non_negative) {
  const std::vector<Witness> all{two_qubit_pt_witness(), flip_witness(3), reduction_witness(3),
                                 choi_witness(), breuer_hall_witness(4)};
  for (const auto& w : all) ASSERT_GE(sep_floor_estimate(w).value, -1e-6);
}

TEST(witness, family_names) {
  ASSERT_EQ(to_string(WitnessFamily::breuer_hall), "breuer-hall");
  ASSERT_EQ(to_string(WitnessFamily::two_qubit_pt), "two-qubit-PT");
}
