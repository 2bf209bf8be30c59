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

#include "netwit/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "netwit/bell.hpp"

namespace netwit {

namespace {

constexpr std::size_t kQutrit = 3;
constexpr double kPptTol = 1e-12;
constexpr double kDetectTol = 1e-4;
// Acceptance margin for PPT during the search, tighter than the reported certificate.
constexpr double kSearchPptTol = 1e-14;

using BellWeights = std::array<double, kQutrit * kQutrit>;

struct Candidate {
  BellWeights p;
  double tr_w;
  double min_pt;
  std::size_t index;
};

class BellPtCache {
 public:
  BellPtCache() {
    for (std::size_t s = 0; s < kQutrit; ++s) {
      for (std::size_t t = 0; t < kQutrit; ++t) {
        pt_.push_back(partial_transpose(bell_projector(BellIndex(kQutrit, s, t)), {1}));
      }
    }
  }

  double min_pt(const BellWeights& p) const {
    ComplexMatrix acc({kQutrit, kQutrit});
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != 0.0) acc += p[i] * pt_[i];
    }
    return min_eigenvalue(acc);
  }

 private:
  std::vector<ComplexMatrix> pt_;
};

// tr[W rho] for lambda = (2/3, 1/3, 0) and rho Bell-diagonal.
double choi_expectation(const BellWeights& p) {
  return (2.0 / 3.0) * (p[0] + p[1] + p[2]) + (1.0 / 3.0) * (p[3] + p[4] + p[5]) - p[0];
}

bool better(const Candidate& a, const Candidate& b) {
  return a.tr_w < b.tr_w || (a.tr_w == b.tr_w && a.index < b.index);
}

std::vector<BellWeights> slice_grid(std::size_t r) {
  std::vector<BellWeights> out;
  const double rr = static_cast<double>(r);
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t j = 0; i + j <= r; ++j) {
      for (std::size_t k = 0; i + j + k <= r; ++k) {
        const std::size_t l = r - i - j - k;
        const double a = static_cast<double>(i) / rr;
        const double b = static_cast<double>(j) / (2.0 * rr);
        const double c = static_cast<double>(k) / (3.0 * rr);
        const double e = static_cast<double>(l) / (3.0 * rr);
        out.push_back({a, b, b, c, c, c, e, e, e});
      }
    }
  }
  return out;
}

}  // namespace

DensityOperator isotropic_state(std::size_t d, double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw std::invalid_argument("isotropic_state: F must lie in [0, 1]");
  }
  const double dd = static_cast<double>(d * d);
  const ComplexMatrix p = p00(d);
  ComplexMatrix rho = fidelity * p;
  rho += ((1.0 - fidelity) / (dd - 1.0)) * (ComplexMatrix::identity({d, d}) - p);
  return DensityOperator(std::move(rho));
}

DensityOperator bell_diagonal_state(std::size_t d, const std::vector<double>& p) {
  if (p.size() != d * d) throw std::invalid_argument("bell_diagonal_state: need d^2 weights");
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw std::invalid_argument("bell_diagonal_state: negative weight");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("bell_diagonal_state: weights must sum to 1");
  }
  ComplexMatrix rho({d, d});
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      if (p[s * d + t] != 0.0) rho += p[s * d + t] * bell_projector(BellIndex(d, s, t));
    }
  }
  return DensityOperator(std::move(rho));
}

Ket random_pure_state(std::size_t dim, Rng& rng) {
  Ket v(dim);
  for (auto& z : v) z = rng.complex_normal();
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

DensityOperator random_density(const Dims& dims, Rng& rng) {
  ComplexMatrix g(dims);
  for (std::size_t r = 0; r < g.side(); ++r) {
    for (std::size_t c = 0; c < g.side(); ++c) g(r, c) = rng.complex_normal();
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= cplx(1.0 / rho.trace().real());
  rho = 0.5 * (rho + rho.adjoint());
  return DensityOperator(std::move(rho));
}

DensityOperator random_density(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dims, rng);
}

DensityOperator random_separable(std::size_t d, std::size_t terms, std::uint64_t seed) {
  if (terms < 1) throw std::invalid_argument("random_separable: terms must be >= 1");
  Rng rng(seed);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - rng.uniform());
    total += w;
  }
  ComplexMatrix rho({d, d});
  for (double w : weights) {
    const Ket a = random_pure_state(d, rng);
    const Ket b = random_pure_state(d, rng);
    rho += (w / total) * ComplexMatrix::projector(kron(a, b), {d, d});
  }
  return DensityOperator(std::move(rho));
}

ChoiSearchResult find_choi_detected_ppt(const ChoiSearchOptions& options) {
  if (options.resolution < 1) throw std::invalid_argument("find_choi_detected_ppt: resolution");
  const BellPtCache cache;
  const std::vector<BellWeights> grid = slice_grid(options.resolution);

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, 64);
  const Candidate none{{}, std::numeric_limits<double>::infinity(), 0.0, 0};
  std::vector<Candidate> best_per_worker(workers, none);
  auto scan = [&](unsigned w) {
    Candidate& best = best_per_worker[w];
    for (std::size_t i = w; i < grid.size(); i += workers) {
      const double tr_w = choi_expectation(grid[i]);
      if (tr_w >= best.tr_w) continue;
      const double min_pt = cache.min_pt(grid[i]);
      if (min_pt < -kSearchPptTol) continue;
      best = {grid[i], tr_w, min_pt, i};
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& th : pool) th.join();
  }
  Candidate best = none;
  for (const auto& c : best_per_worker) {
    if (better(c, best)) best = c;
  }

  ChoiSearchResult result{false, {}, std::nullopt, best.tr_w, best.min_pt, grid.size(), 0};
  if (!std::isfinite(best.tr_w)) return result;

  Rng rng(options.seed);
  double step = 0.05;
  std::size_t rejected_run = 0;
  for (std::size_t it = 0; it < options.refine_steps; ++it) {
    const auto from = static_cast<std::size_t>(rng.uniform() * 9.0);
    auto to = static_cast<std::size_t>(rng.uniform() * 8.0);
    if (to >= from) ++to;
    Candidate trial = best;
    const double delta = std::min(trial.p[from], step * rng.uniform());
    trial.p[from] -= delta;
    trial.p[to] += delta;
    trial.tr_w = choi_expectation(trial.p);
    bool accepted = false;
    if (delta > 0.0 && trial.tr_w < best.tr_w) {
      trial.min_pt = cache.min_pt(trial.p);
      if (trial.min_pt >= -kSearchPptTol) {
        best = trial;
        accepted = true;
        ++result.refine_accepted;
      }
    }
    rejected_run = accepted ? 0 : rejected_run + 1;
    if (rejected_run >= 400) {
      step = std::max(step * 0.5, 1e-7);
      rejected_run = 0;
    }
  }

  double total = 0.0;
  for (double x : best.p) total += x;
  for (double& x : best.p) x /= total;
  std::vector<double> p(best.p.begin(), best.p.end());
  DensityOperator rho = bell_diagonal_state(kQutrit, p);
  result.p = p;
  result.witness_expectation = choi_expectation(best.p);
  result.min_pt_eigenvalue = min_eigenvalue(partial_transpose(rho.matrix(), {1}));
  result.rho = std::move(rho);
  result.found = result.min_pt_eigenvalue >= -kPptTol && result.witness_expectation <= -kDetectTol;
  return result;
}

}  // namespace netwit
