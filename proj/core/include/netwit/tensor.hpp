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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace netwit {

using cplx = std::complex<double>;
using Dims = std::vector<std::size_t>;
using Ket = std::vector<cplx>;

/// Structural tolerance for Hermiticity / positivity / trace checks.
inline constexpr double kStructuralTol = 1e-10;
/// Tolerance for operator identities reconstructed from several products.
inline constexpr double kIdentityTol = 1e-9;
/// Floor below which a partial-transpose eigenvalue counts as negative.
inline constexpr double kPptFloor = -1e-9;

/// Dense square complex matrix acting on a tensor product of factors.
///
/// Storage is row-major. Composite indices follow the convention that the
/// leftmost factor in `dims()` is the most significant digit, so
/// `kron(a, b)(i_a * side_b + i_b, j_a * side_b + j_b) == a(i_a, j_a) * b(i_b, j_b)`.
/// Every factor dimension must be at least 2.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(Dims dims);
  ComplexMatrix(Dims dims, std::vector<cplx> data);

  static ComplexMatrix zeros(Dims dims);
  static ComplexMatrix identity(Dims dims);
  static ComplexMatrix diagonal(std::span<const double> values, Dims dims);
  /// |v><v|
  static ComplexMatrix projector(std::span<const cplx> v, Dims dims);
  /// |a><b|
  static ComplexMatrix outer(std::span<const cplx> a, std::span<const cplx> b, Dims dims);

  std::size_t side() const { return side_; }
  const Dims& dims() const { return dims_; }
  std::span<const cplx> data() const { return data_; }

  cplx operator()(std::size_t row, std::size_t col) const { return data_[row * side_ + col]; }
  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * side_ + col]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cplx trace() const;

  /// Same entries, different factor bookkeeping. Product of `dims` must equal side().
  ComplexMatrix with_dims(Dims dims) const;

  /// max_{ij} |a_ij - b_ij|; sides must agree (dims are not compared).
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;
  bool is_hermitian(double tol = kStructuralTol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, cplx scale) { return lhs *= scale; }
  friend ComplexMatrix operator*(cplx scale, ComplexMatrix rhs) { return rhs *= scale; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, double scale) { return lhs *= cplx(scale); }
  friend ComplexMatrix operator*(double scale, ComplexMatrix rhs) { return rhs *= cplx(scale); }
  friend ComplexMatrix operator-(ComplexMatrix m) { return m *= cplx(-1.0); }
  /// Matrix product; the result keeps the left operand's dims.
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  Dims dims_;
  std::size_t side_ = 0;
  std::vector<cplx> data_;
};

std::size_t product_of(const Dims& dims);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);
Ket kron(std::span<const cplx> a, std::span<const cplx> b);

/// Traces out every factor not listed in `keep`. The surviving factors keep
/// their original relative order regardless of the order of `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::vector<std::size_t> keep);

/// Transposes the listed factors' indices in the computational basis.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<std::size_t>& subset);

/// Reorders tensor factors: factor k of the result is factor `order[k]` of `m`.
ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<std::size_t>& order);

/// Places `op` on `target_factors` of a space with `full_dims`, identity elsewhere.
/// Factor j of `op` lands on `target_factors[j]`.
ComplexMatrix embed(const ComplexMatrix& op, const std::vector<std::size_t>& target_factors,
                    const Dims& full_dims);

struct EigenDecomposition {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k is the eigenvector of values[k]
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

/// <v|m|v>
cplx overlap(std::span<const cplx> v, const ComplexMatrix& m);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> v);
Ket apply(const ComplexMatrix& m, std::span<const cplx> v);
/// tr[a b] without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// A validated quantum state: Hermitian, positive semidefinite and unit trace
/// within kStructuralTol.
class DensityOperator {
 public:
  /// Throws std::invalid_argument naming the violated property.
  explicit DensityOperator(ComplexMatrix mat, double tol = kStructuralTol);

  const ComplexMatrix& matrix() const { return mat_; }
  const Dims& dims() const { return mat_.dims(); }
  std::size_t side() const { return mat_.side(); }

 private:
  ComplexMatrix mat_;
};

}  // namespace netwit
