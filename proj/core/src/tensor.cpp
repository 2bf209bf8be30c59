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

#include "netwit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netwit {

namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) {
    throw std::invalid_argument("ComplexMatrix: dims must be non-empty");
  }
  for (std::size_t d : dims) {
    if (d < 2) {
      throw std::invalid_argument("ComplexMatrix: every factor dimension must be >= 2, got " +
                                  std::to_string(d));
    }
  }
}

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t s = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = s;
    s *= dims[k];
  }
  return strides;
}

// Offsets (into the full composite index) of every multi-index over `factors`,
// enumerated row-major with the first listed factor most significant.
std::vector<std::size_t> offsets_over(const Dims& dims, const std::vector<std::size_t>& strides,
                                      const std::vector<std::size_t>& factors) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t f : factors) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[f]);
    for (std::size_t base : offsets) {
      for (std::size_t digit = 0; digit < dims[f]; ++digit) {
        next.push_back(base + digit * strides[f]);
      }
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> complement(std::size_t count, const std::vector<std::size_t>& factors) {
  std::vector<bool> used(count, false);
  for (std::size_t f : factors) used[f] = true;
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < count; ++k) {
    if (!used[k]) rest.push_back(k);
  }
  return rest;
}

void check_factor_set(const ComplexMatrix& m, const std::vector<std::size_t>& factors,
                      const char* who) {
  std::vector<bool> seen(m.dims().size(), false);
  for (std::size_t f : factors) {
    if (f >= m.dims().size()) {
      throw std::invalid_argument(std::string(who) + ": factor index out of range");
    }
    if (seen[f]) {
      throw std::invalid_argument(std::string(who) + ": duplicate factor index");
    }
    seen[f] = true;
  }
}

}  // namespace

std::size_t product_of(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

ComplexMatrix::ComplexMatrix(Dims dims) : dims_(std::move(dims)) {
  check_dims(dims_);
  side_ = product_of(dims_);
  data_.assign(side_ * side_, cplx(0.0));
}

ComplexMatrix::ComplexMatrix(Dims dims, std::vector<cplx> data) : dims_(std::move(dims)) {
  check_dims(dims_);
  side_ = product_of(dims_);
  if (data.size() != side_ * side_) {
    throw std::invalid_argument("ComplexMatrix: data size does not match dims");
  }
  data_ = std::move(data);
}

ComplexMatrix ComplexMatrix::zeros(Dims dims) { return ComplexMatrix(std::move(dims)); }

ComplexMatrix ComplexMatrix::identity(Dims dims) {
  ComplexMatrix m(std::move(dims));
  for (std::size_t i = 0; i < m.side_; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values, Dims dims) {
  ComplexMatrix m(std::move(dims));
  if (values.size() != m.side_) {
    throw std::invalid_argument("ComplexMatrix::diagonal: size mismatch");
  }
  for (std::size_t i = 0; i < m.side_; ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const cplx> v, Dims dims) {
  return outer(v, v, std::move(dims));
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> a, std::span<const cplx> b, Dims dims) {
  ComplexMatrix m(std::move(dims));
  if (a.size() != m.side_ || b.size() != m.side_) {
    throw std::invalid_argument("ComplexMatrix::outer: vector length does not match dims");
  }
  for (std::size_t i = 0; i < m.side_; ++i) {
    for (std::size_t j = 0; j < m.side_; ++j) m(i, j) = a[i] * std::conj(b[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dims_);
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = 0; j < side_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dims_);
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = 0; j < side_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < side_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::with_dims(Dims dims) const {
  if (product_of(dims) != side_) {
    throw std::invalid_argument("ComplexMatrix::with_dims: product of dims must equal side");
  }
  return ComplexMatrix(std::move(dims), data_);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.side_ != side_) {
    throw std::invalid_argument("ComplexMatrix::max_abs_diff: side mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  }
  return worst;
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& z : data_) worst = std::max(worst, std::abs(z));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = i; j < side_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.side_ != side_) throw std::invalid_argument("ComplexMatrix +: side mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.side_ != side_) throw std::invalid_argument("ComplexMatrix -: side mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.side_ != rhs.side_) throw std::invalid_argument("ComplexMatrix *: side mismatch");
  const std::size_t n = lhs.side_;
  ComplexMatrix out(lhs.dims_);
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = &out.data_[i * n];
    for (std::size_t k = 0; k < n; ++k) {
      const cplx a = lhs.data_[i * n + k];
      if (a == cplx(0.0)) continue;
      const cplx* rrow = &rhs.data_[k * n];
      for (std::size_t j = 0; j < n; ++j) row[j] += a * rrow[j];
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  ComplexMatrix out(std::move(dims));
  const std::size_t nb = b.side();
  for (std::size_t ia = 0; ia < a.side(); ++ia) {
    for (std::size_t ja = 0; ja < a.side(); ++ja) {
      const cplx x = a(ia, ja);
      if (x == cplx(0.0)) continue;
      for (std::size_t ib = 0; ib < nb; ++ib) {
        for (std::size_t jb = 0; jb < nb; ++jb) out(ia * nb + ib, ja * nb + jb) = x * b(ib, jb);
      }
    }
  }
  return out;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
  if (factors.size() == 0) throw std::invalid_argument("kron: no factors");
  auto it = factors.begin();
  ComplexMatrix out = *it++;
  for (; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

Ket kron(std::span<const cplx> a, std::span<const cplx> b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const cplx& x : a) {
    for (const cplx& y : b) out.push_back(x * y);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::vector<std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: must keep at least one factor");
  check_factor_set(m, keep, "partial_trace");
  std::sort(keep.begin(), keep.end());
  const Dims& dims = m.dims();
  const auto strides = strides_of(dims);
  const auto traced = complement(dims.size(), keep);
  const auto kept_off = offsets_over(dims, strides, keep);
  const auto traced_off = offsets_over(dims, strides, traced);

  Dims out_dims;
  for (std::size_t f : keep) out_dims.push_back(dims[f]);
  ComplexMatrix out(std::move(out_dims));
  for (std::size_t i = 0; i < kept_off.size(); ++i) {
    for (std::size_t j = 0; j < kept_off.size(); ++j) {
      cplx acc = 0.0;
      for (std::size_t t : traced_off) acc += m(kept_off[i] + t, kept_off[j] + t);
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<std::size_t>& subset) {
  check_factor_set(m, subset, "partial_transpose");
  const Dims& dims = m.dims();
  const auto strides = strides_of(dims);
  const auto rest = complement(dims.size(), subset);
  const auto sub_off = offsets_over(dims, strides, subset);
  const auto rest_off = offsets_over(dims, strides, rest);

  ComplexMatrix out(dims);
  for (std::size_t is : sub_off) {
    for (std::size_t js : sub_off) {
      for (std::size_t ir : rest_off) {
        for (std::size_t jr : rest_off) out(is + ir, js + jr) = m(js + ir, is + jr);
      }
    }
  }
  return out;
}

ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<std::size_t>& order) {
  const Dims& dims = m.dims();
  if (order.size() != dims.size()) {
    throw std::invalid_argument("permute_factors: order must list every factor once");
  }
  check_factor_set(m, order, "permute_factors");
  const auto strides = strides_of(dims);
  // Enumerating the old offsets over `order` walks the new composite index in order.
  const auto source = offsets_over(dims, strides, order);
  Dims out_dims;
  for (std::size_t f : order) out_dims.push_back(dims[f]);
  ComplexMatrix out(std::move(out_dims));
  const std::size_t n = m.side();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(source[i], source[j]);
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const std::vector<std::size_t>& target_factors,
                    const Dims& full_dims) {
  if (op.dims().size() != target_factors.size()) {
    throw std::invalid_argument("embed: op has " + std::to_string(op.dims().size()) +
                                " factors but " + std::to_string(target_factors.size()) +
                                " targets were given");
  }
  std::vector<bool> seen(full_dims.size(), false);
  for (std::size_t k = 0; k < target_factors.size(); ++k) {
    const std::size_t f = target_factors[k];
    if (f >= full_dims.size() || seen[f]) {
      throw std::invalid_argument("embed: invalid or repeated target factor");
    }
    seen[f] = true;
    if (full_dims[f] != op.dims()[k]) {
      throw std::invalid_argument("embed: dimension mismatch on factor " + std::to_string(f));
    }
  }
  const auto rest = complement(full_dims.size(), target_factors);
  ComplexMatrix staged = op;
  if (!rest.empty()) {
    Dims rest_dims;
    for (std::size_t f : rest) rest_dims.push_back(full_dims[f]);
    staged = kron(op, ComplexMatrix::identity(std::move(rest_dims)));
  }
  // staged factor k corresponds to full factor layout[k]
  std::vector<std::size_t> layout = target_factors;
  layout.insert(layout.end(), rest.begin(), rest.end());
  std::vector<std::size_t> order(full_dims.size());
  for (std::size_t k = 0; k < layout.size(); ++k) order[layout[k]] = k;
  return permute_factors(staged, order);
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  constexpr double kHermitianTol = 1e-8;
  constexpr double kOffDiagonalTol = 1e-13;
  constexpr int kMaxSweeps = 100;

  const std::size_t n = m.side();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermitianTol) {
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
      }
      scale += std::norm(m(i, j));
    }
  }
  scale = std::sqrt(scale);

  // Working copy, symmetrised; `vt` holds eigenvectors as rows.
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));
    a[i * n + i] = a[i * n + i].real();
  }
  std::vector<cplx> vt(n * n, cplx(0.0));
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a[i * n + j]);
    }
    return std::sqrt(2.0 * s);
  };

  const double target = kOffDiagonalTol * std::max(scale, 1e-300);
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a[p * n + q];
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const cplx phase = apq / r;  // e^{i phi}
        const double h = aqq - app;
        double t;
        if (std::abs(h) + 100.0 * r == std::abs(h)) {
          t = r / h;
        } else {
          const double theta = 0.5 * h / r;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // V = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
        const cplx vpp = c;
        const cplx vpq = s;
        const cplx vqp = -s * std::conj(phase);
        const cplx vqq = c * std::conj(phase);

        // rows p, q <- V^dagger rows
        cplx* rp = &a[p * n];
        cplx* rq = &a[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const cplx xp = rp[k];
          const cplx xq = rq[k];
          rp[k] = std::conj(vpp) * xp + std::conj(vqp) * xq;
          rq[k] = std::conj(vpq) * xp + std::conj(vqq) * xq;
        }
        // columns follow by Hermiticity
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a[k * n + p] = std::conj(rp[k]);
          a[k * n + q] = std::conj(rq[k]);
        }
        a[p * n + p] = app - t * r;
        a[q * n + q] = aqq + t * r;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        // eigenvector columns p, q <- U V (stored as rows of vt)
        cplx* up = &vt[p * n];
        cplx* uq = &vt[q * n];
        for (std::size_t k = 0; k < n; ++k) {
          const cplx xp = up[k];
          const cplx xq = uq[k];
          up[k] = xp * vpp + xq * vqp;
          uq[k] = xp * vpq + xq * vqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x].real() < a[y * n + y].real();
  });
  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(m.dims())};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a[src * n + src].real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vt[src * n + i];
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigen(m).values;
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigen(m).values.front(); }

cplx overlap(std::span<const cplx> v, const ComplexMatrix& m) {
  if (v.size() != m.side()) throw std::invalid_argument("overlap: dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) row += m(i, j) * v[j];
    acc += std::conj(v[i]) * row;
  }
  return acc;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(std::span<const cplx> v) { return std::sqrt(inner(v, v).real()); }

Ket apply(const ComplexMatrix& m, std::span<const cplx> v) {
  if (v.size() != m.side()) throw std::invalid_argument("apply: dimension mismatch");
  Ket out(v.size(), cplx(0.0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.side() != b.side()) throw std::invalid_argument("trace_of_product: side mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.side(); ++i) {
    for (std::size_t k = 0; k < a.side(); ++k) acc += a(i, k) * b(k, i);
  }
  return acc;
}

DensityOperator::DensityOperator(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
  if (!mat_.is_hermitian(tol)) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - 1.0) > tol) {
    throw std::invalid_argument("DensityOperator: trace is not 1");
  }
  if (min_eigenvalue(mat_) < -tol) {
    throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
  }
}

}  // namespace netwit
