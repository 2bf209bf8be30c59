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

#include "netwit/network.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "netwit/bell.hpp"

namespace netwit {

namespace {

ComplexMatrix assemble(const std::vector<ProductTerm>& terms, std::size_t parties,
                       std::size_t local_dim) {
  if (terms.empty()) throw std::invalid_argument("NetworkState: no product terms");
  const Dims layer(parties, local_dim);
  Dims full = layer;
  full.insert(full.end(), layer.begin(), layer.end());
  ComplexMatrix state(full);
  for (const auto& term : terms) {
    if (term.layer2.dims() != layer || term.layer3.dims() != layer) {
      throw std::invalid_argument("NetworkState: product term dims do not match the layer");
    }
    state += term.weight * kron(term.layer2, term.layer3);
  }
  return state;
}

ComplexMatrix complement_of_p00(std::size_t d) {
  const double dd = static_cast<double>(d * d);
  return (1.0 / (dd - 1.0)) * (ComplexMatrix::identity({d, d}) - p00(d));
}

void check_bipartite_eta(double eta, std::size_t d) {
  if (!(eta >= 1.0 / static_cast<double>(d) - 1e-12 && eta < 1.0)) {
    throw std::invalid_argument("threshold eta must lie in [1/d, 1), got " + std::to_string(eta));
  }
}

std::string default_name(std::size_t factor, std::size_t parties) {
  const std::size_t layer = factor / parties;
  const char party = static_cast<char>('A' + factor % parties);
  return std::string(1, party) + std::to_string(layer + 2);
}

}  // namespace

NetworkState::NetworkState(std::string family, std::size_t parties, std::size_t local_dim,
                           std::vector<ProductTerm> terms, double eta, double recon_constant,
                           Ket target, ComplexMatrix readout)
    : family_(std::move(family)),
      parties_(parties),
      local_dim_(local_dim),
      terms_(std::move(terms)),
      state_(assemble(terms_, parties, local_dim)),
      eta_(eta),
      recon_constant_(recon_constant),
      target_(std::move(target)),
      readout_(std::move(readout)) {
  if (!(recon_constant_ > 0.0)) {
    throw std::invalid_argument("NetworkState: recon_constant must be positive");
  }
  const std::size_t layer_side = product_of(layer_dims());
  if (target_.size() != layer_side || std::abs(norm(target_) - 1.0) > kStructuralTol) {
    throw std::invalid_argument("NetworkState: target must be a unit ket on one layer");
  }
  if (readout_.side() != layer_side ||
      (readout_.adjoint() * readout_).max_abs_diff(ComplexMatrix::identity(readout_.dims())) >
          kStructuralTol) {
    throw std::invalid_argument("NetworkState: readout must be unitary on one layer");
  }
  if (std::abs(std::abs(netwit::apply(readout_, target_)[0]) - 1.0) > kStructuralTol) {
    throw std::invalid_argument("NetworkState: readout must map the target to |0...0>");
  }
}

bool NetworkState::structurally_separable(double tol) const {
  for (const auto& term : terms_) {
    if (term.weight < 0.0) return false;
    if (!term.layer2.is_hermitian(tol) || !term.layer3.is_hermitian(tol)) return false;
    if (min_eigenvalue(term.layer2) < -tol || min_eigenvalue(term.layer3) < -tol) return false;
  }
  return assemble(terms_, parties_, local_dim_).max_abs_diff(state_.matrix()) <= tol;
}

ComplexMatrix bell_readout_unitary(std::size_t d) {
  ComplexMatrix h({d});
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>((j * k) % d) / static_cast<double>(d);
      h(j, k) = amp * cplx(std::cos(angle), std::sin(angle));
    }
  }
  ComplexMatrix cnot({d, d});
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) cnot(j * d + (k + j) % d, j * d + k) = 1.0;
  }
  return kron(h.adjoint(), ComplexMatrix::identity({d})) * cnot.adjoint();
}

NetworkState bipartite_network(std::string family, std::size_t d, std::vector<ProductTerm> terms,
                               double eta, double recon_constant) {
  return NetworkState(std::move(family), 2, d, std::move(terms), eta, recon_constant, phi_plus(d),
                      bell_readout_unitary(d));
}

NetworkState two_qubit_network() {
  const ComplexMatrix psi_minus = bell_projector(BellIndex(2, 1, 1));
  const ComplexMatrix phi = p00(2);
  const ComplexMatrix id = ComplexMatrix::identity({2, 2});
  std::vector<ProductTerm> terms{{0.25, psi_minus, phi}, {1.0 / 12.0, id - psi_minus, id - phi}};
  return bipartite_network("two-qubit", 2, std::move(terms), 0.5, 0.25);
}

NetworkState decomposable_network(const DensityOperator& q) {
  const Dims& dims = q.dims();
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw std::invalid_argument("decomposable_network: Q must act on d x d");
  }
  const std::size_t d = dims[0];
  const double dd = static_cast<double>(d);
  const ComplexMatrix wt = partial_transpose(q.matrix(), {1}).transpose();
  const auto spectrum = hermitian_eigenvalues(wt);
  const double lambda = std::max(std::abs(spectrum.front()), std::abs(spectrum.back()));
  if (std::abs(lambda * dd * dd - 1.0) < 1e-12) {
    throw std::invalid_argument(
        "decomposable_network: lambda d^2 = 1, Q^Gamma is proportional to the identity");
  }
  const double denom = dd * dd * dd * lambda + dd - 2.0;
  const double c1 = (dd * dd * lambda - 1.0) / denom;
  const double c2 = (dd - 1.0) * (dd * dd * lambda + 1.0) / denom;
  const ComplexMatrix id = ComplexMatrix::identity({d, d});
  std::vector<ProductTerm> terms{
      {c1, (1.0 / (lambda * dd * dd - 1.0)) * (lambda * id - wt), p00(d)},
      {c2, (1.0 / (lambda * dd * dd + 1.0)) * (lambda * id + wt), complement_of_p00(d)},
  };
  return bipartite_network("decomposable", d, std::move(terms), 1.0 / dd,
                           2.0 * (dd - 1.0) / (dd * denom));
}

NetworkState flip_network(std::size_t d) {
  const double dd = static_cast<double>(d);
  const ComplexMatrix f = flip_operator(d);
  const ComplexMatrix id = ComplexMatrix::identity({d, d});
  std::vector<ProductTerm> terms{
      {1.0 / (dd + 2.0), (1.0 / (dd * dd - dd)) * (id - f), p00(d)},
      {(dd + 1.0) / (dd + 2.0), (1.0 / (dd * dd + dd)) * (id + f), complement_of_p00(d)},
  };
  return bipartite_network("flip", d, std::move(terms), 1.0 / dd, 2.0 / (dd * (dd + 2.0)));
}

NetworkState pbd_network(const LambdaVec& lambda) {
  const std::size_t d = lambda.size();
  if (lambda[0] == 0.0) {
    throw std::invalid_argument("threshold eta would be 0; witness not realizable this way");
  }
  const double dd = static_cast<double>(d);
  std::vector<ProductTerm> terms;
  for (std::size_t s = 0; s < d; ++s) {
    if (lambda[s] == 0.0) continue;
    for (std::size_t t = 0; t < d; ++t) {
      const ComplexMatrix p = bell_projector(BellIndex(d, s, t));
      terms.push_back({lambda[s] / dd, p, p});
    }
  }
  return bipartite_network("pbd", d, std::move(terms), lambda[0], lambda[0] / dd);
}

NetworkState reduction_network(std::size_t d) {
  const NetworkState n = pbd_network(LambdaVec(std::vector<double>(d, 1.0 / static_cast<double>(d))));
  return bipartite_network("reduction", d, n.terms(), n.eta(), n.recon_constant());
}

NetworkState smolin_network() {
  const NetworkState n = reduction_network(2);
  return bipartite_network("smolin", 2, n.terms(), n.eta(), n.recon_constant());
}

NetworkState choi_network() {
  const NetworkState n = pbd_network(LambdaVec({2.0 / 3.0, 1.0 / 3.0, 0.0}));
  return bipartite_network("choi", 3, n.terms(), n.eta(), n.recon_constant());
}

BreuerHallCoefficients breuer_hall_coefficients(std::size_t d) {
  if (d < 4 || d % 2 != 0) throw std::invalid_argument("bh_network: d must be even and >= 4");
  const long long n = static_cast<long long>(d);
  const long long denom = 3 * n * n - 3 * n + 2;
  const long long n0 = 2 * n * n - 2 * n;
  const long long n1 = n + 1;
  const long long n2 = (n - 1) * (n - 1);
  if (n0 + n1 + n2 != denom) throw std::logic_error("Breuer-Hall weights do not sum to one");
  const double dn = static_cast<double>(denom);
  return {static_cast<double>(n0) / dn, static_cast<double>(n1) / dn,
          static_cast<double>(n2) / dn};
}

NetworkState bh_network(std::size_t d) {
  const auto [c0, c1, c2] = breuer_hall_coefficients(d);
  const double dd = static_cast<double>(d);
  const ComplexMatrix fp = flip_prime(d);
  const ComplexMatrix id = ComplexMatrix::identity({d, d});
  std::vector<ProductTerm> terms;
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      const ComplexMatrix p = bell_projector(BellIndex(d, s, t));
      terms.push_back({c0 / (dd * dd), p, p});
    }
  }
  terms.push_back({c1, (1.0 / (dd * dd + dd)) * (id + fp), p00(d)});
  terms.push_back({c2, (1.0 / (dd * dd - dd)) * (id - fp), complement_of_p00(d)});
  return bipartite_network("breuer-hall", d, std::move(terms), 1.0 / dd, c0 / (dd * dd));
}

ComplexMatrix reconstruct_witness(const NetworkState& n, double eta) {
  const Dims layer = n.layer_dims();
  const std::size_t side = product_of(layer);
  ComplexMatrix x = ComplexMatrix::identity(layer) * eta;
  x -= ComplexMatrix::projector(n.target(), layer);
  const ComplexMatrix& big = n.state().matrix();
  ComplexMatrix out(layer);
  // out[i, j] = sum_{a, b} N[(i, a), (j, b)] X[b, a]
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      cplx acc = 0.0;
      for (std::size_t a = 0; a < side; ++a) {
        for (std::size_t b = 0; b < side; ++b) acc += big(i * side + a, j * side + b) * x(b, a);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Decomposition solve_decomposition(std::vector<DecompositionTerm> pieces, double eta,
                                  std::size_t d) {
  check_bipartite_eta(eta, d);
  if (pieces.empty()) throw std::invalid_argument("solve_decomposition: no terms");
  const Ket phi = phi_plus(d);
  double k = 0.0;
  std::vector<double> ratio;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    auto& piece = pieces[j];
    const double tr = piece.omega.trace().real();
    if (!(tr > 0.0) || min_eigenvalue(piece.omega) < -kStructuralTol) {
      throw std::invalid_argument("solve_decomposition: term " + std::to_string(j) +
                                  " has a non-PSD or traceless operator");
    }
    piece.omega *= cplx(1.0 / tr);
    piece.a *= tr;
    DensityOperator check(piece.pi);
    const double fidelity = overlap(phi, piece.pi).real();
    const double gap = eta - fidelity;
    if (piece.a != 0.0 && (gap == 0.0 || (piece.a > 0.0) != (gap > 0.0))) {
      throw std::invalid_argument(
          "solve_decomposition: infeasible sign for term " + std::to_string(j) + " (a = " +
          std::to_string(piece.a) + ", <phi|pi|phi> = " + std::to_string(fidelity) +
          ", eta = " + std::to_string(eta) + ")");
    }
    ratio.push_back(piece.a == 0.0 ? 0.0 : piece.a / gap);
    k += ratio.back();
  }
  if (!(k > 0.0)) throw std::invalid_argument("solve_decomposition: all weights vanish");

  std::vector<double> c;
  std::vector<ProductTerm> terms;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    c.push_back(ratio[j] / k);
    if (c.back() > 0.0) terms.push_back({c.back(), pieces[j].omega, pieces[j].pi});
  }
  NetworkState network = bipartite_network("decomposition", d, std::move(terms), eta, 1.0 / k);
  return {std::move(pieces), std::move(c), k, std::move(network)};
}

Decomposition solve_decomposition(const Witness& w, double eta,
                                  std::optional<std::vector<ComplexMatrix>> pis) {
  const std::size_t d = w.dim();
  if (w.matrix().dims().size() != 2) {
    throw std::invalid_argument("solve_decomposition: witness must be bipartite");
  }
  const ComplexMatrix wt = w.matrix().transpose();
  const auto eig = hermitian_eigen(wt);
  ComplexMatrix positive({d, d});
  ComplexMatrix negative({d, d});
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    Ket v(wt.side());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eig.vectors(i, k);
    const ComplexMatrix proj = ComplexMatrix::projector(v, {d, d});
    if (eig.values[k] > 0.0) positive += eig.values[k] * proj;
    if (eig.values[k] < 0.0) negative += (-eig.values[k]) * proj;
  }
  std::vector<ComplexMatrix> chosen =
      pis ? std::move(*pis) : std::vector<ComplexMatrix>{complement_of_p00(d), p00(d)};
  if (chosen.size() != 2) {
    throw std::invalid_argument("solve_decomposition: expected two pi operators");
  }
  std::vector<DecompositionTerm> pieces;
  if (positive.trace().real() > kStructuralTol) pieces.push_back({1.0, positive, chosen[0]});
  if (negative.trace().real() > kStructuralTol) pieces.push_back({-1.0, negative, chosen[1]});
  return solve_decomposition(std::move(pieces), eta, d);
}

std::vector<CutReport> ppt_report(const ComplexMatrix& state,
                                  const std::vector<std::string>& names) {
  const std::size_t k = state.dims().size();
  if (k < 2) throw std::invalid_argument("ppt_report: need at least two factors");
  if (!names.empty() && names.size() != k) {
    throw std::invalid_argument("ppt_report: one name per factor required");
  }
  auto name = [&](std::size_t f) { return names.empty() ? "S" + std::to_string(f) : names[f]; };
  std::vector<CutReport> out;
  // subsets containing factor 0, excluding the full set
  for (std::size_t mask = 1; mask < (std::size_t{1} << k) - 1; mask += 2) {
    CutReport cut{{}, {}, 0.0};
    std::string left;
    std::string right;
    for (std::size_t f = 0; f < k; ++f) {
      if (mask & (std::size_t{1} << f)) {
        cut.side.push_back(f);
        left += name(f);
      } else {
        right += name(f);
      }
    }
    cut.label = left + ":" + right;
    cut.min_eigenvalue = min_eigenvalue(partial_transpose(state, cut.side));
    out.push_back(std::move(cut));
  }
  return out;
}

std::vector<CutReport> ppt_report(const NetworkState& n) {
  std::vector<std::string> names;
  for (std::size_t f = 0; f < 2 * n.parties(); ++f) names.push_back(default_name(f, n.parties()));
  return ppt_report(n.state().matrix(), names);
}

}  // namespace netwit
