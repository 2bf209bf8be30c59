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

#include "netwit/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "netwit/bell.hpp"
#include "netwit/rng.hpp"

namespace netwit {

namespace {

constexpr double kVanishingProb = 1e-14;
constexpr double kBoundaryBand = 1e-9;
constexpr double kRealisationTol = 1e-9;
constexpr double kWilsonZ = 1.959963984540054;

void check_layer(const ComplexMatrix& rho, const NetworkState& n) {
  if (rho.dims() != n.layer_dims()) {
    throw std::invalid_argument("state dims do not match the network's tested layer");
  }
}

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += std::max(probs[i], 0.0);
    cdf[i] = acc;
  }
  return cdf;
}

// X^{-s} Z^t on one site: |j> -> w^{tj} |j - s>.
ComplexMatrix bell_correction(std::size_t d, std::size_t s, std::size_t t) {
  ComplexMatrix k({d});
  for (std::size_t j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((t * j) % d) / static_cast<double>(d);
    k((j + d - s) % d, j) = cplx(std::cos(angle), std::sin(angle));
  }
  return k;
}

}  // namespace

ComplexMatrix filter_unnormalized(const ComplexMatrix& rho, const NetworkState& n) {
  check_layer(rho, n);
  const std::size_t side = rho.side();
  const ComplexMatrix& big = n.state().matrix();
  const double inv = 1.0 / static_cast<double>(side);
  ComplexMatrix out(n.layer_dims());
  for (std::size_t k = 0; k < side; ++k) {
    for (std::size_t l = 0; l < side; ++l) {
      const cplx r = rho(k, l) * inv;
      if (r == cplx(0.0)) continue;
      for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) out(i, j) += r * big(k * side + i, l * side + j);
      }
    }
  }
  return out;
}

FilterResult filtering_channel(const DensityOperator& rho, const NetworkState& n) {
  ComplexMatrix out = filter_unnormalized(rho.matrix(), n);
  const double p = out.trace().real();
  if (!(p > kVanishingProb)) throw std::invalid_argument("post-selection probability vanishes");
  out *= cplx(1.0 / p);
  return {p, DensityOperator(std::move(out), 1e-8)};
}

double singlet_fraction(const DensityOperator& sigma) {
  const Dims& dims = sigma.dims();
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw std::invalid_argument("singlet_fraction: sigma must act on d x d");
  }
  return target_fraction(sigma.matrix(), phi_plus(dims[0]));
}

double target_fraction(const ComplexMatrix& sigma, std::span<const cplx> target) {
  if (target.size() != sigma.side()) throw std::invalid_argument("target_fraction: size mismatch");
  return overlap(target, sigma).real();
}

std::vector<double> readout_probs(const ComplexMatrix& sigma, const ComplexMatrix& readout) {
  if (readout.side() != sigma.side()) throw std::invalid_argument("readout_probs: size mismatch");
  const ComplexMatrix rotated = readout * sigma * readout.adjoint();
  std::vector<double> probs(sigma.side());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = rotated(i, i).real();
  return probs;
}

std::vector<double> measurement_circuit_probs(const DensityOperator& sigma) {
  const Dims& dims = sigma.dims();
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw std::invalid_argument("measurement_circuit_probs: sigma must act on d x d");
  }
  return readout_probs(sigma.matrix(), bell_readout_unitary(dims[0]));
}

std::vector<double> bell_outcome_distribution(const DensityOperator& rho, const NetworkState& n) {
  check_layer(rho.matrix(), n);
  const std::size_t d = n.local_dim();
  const std::size_t m = n.parties();
  const std::size_t side = rho.side();
  std::vector<std::size_t> layer2(m);
  std::iota(layer2.begin(), layer2.end(), 0);
  const ComplexMatrix marginal = partial_trace(n.state().matrix(), layer2);

  std::vector<ComplexMatrix> corrections;
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) corrections.push_back(bell_correction(d, s, t));
  }

  const std::size_t per_party = d * d;
  std::size_t outcomes = 1;
  for (std::size_t p = 0; p < m; ++p) outcomes *= per_party;
  std::vector<double> probs(outcomes);
  std::vector<std::size_t> digits(m);
  for (std::size_t idx = 0; idx < outcomes; ++idx) {
    std::size_t rest = idx;
    for (std::size_t p = m; p-- > 0;) {
      digits[p] = rest % per_party;
      rest /= per_party;
    }
    ComplexMatrix k = corrections[digits[0]];
    for (std::size_t p = 1; p < m; ++p) k = kron(k, corrections[digits[p]]);
    const ComplexMatrix shifted = k.adjoint() * rho.matrix() * k;
    cplx acc = 0.0;
    for (std::size_t a = 0; a < side; ++a) {
      for (std::size_t b = 0; b < side; ++b) acc += shifted(a, b) * marginal(a, b);
    }
    probs[idx] = acc.real() / static_cast<double>(side);
  }
  return probs;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::detected: return "detected";
    case Verdict::not_detected: return "not_detected";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

DetectionReport detect_exact(const DensityOperator& rho, const NetworkState& n, const Witness& w) {
  check_layer(rho.matrix(), n);
  if (w.matrix().dims() != n.layer_dims()) {
    throw std::invalid_argument("witness dims do not match the network's tested layer");
  }
  const ComplexMatrix expected = n.recon_constant() * w.matrix().transpose();
  const double recon_err = reconstruct_witness(n, w.eta()).max_abs_diff(expected);
  if (recon_err > kRealisationTol) {
    throw std::invalid_argument("network does not realise the witness (reconstruction error " +
                                std::to_string(recon_err) + ")");
  }

  const FilterResult filtered = filtering_channel(rho, n);
  const double fraction = target_fraction(filtered.out.matrix(), n.target());
  const double expectation = trace_of_product(rho.matrix(), w.matrix()).real();
  const double eta = w.eta();
  const double scale = static_cast<double>(rho.side()) * filtered.success_prob;

  DetectionReport report{n.family(),
                         n.parties(),
                         n.local_dim(),
                         filtered.success_prob,
                         fraction,
                         eta,
                         fraction > eta ? Verdict::detected : Verdict::not_detected,
                         expectation,
                         fraction - eta,
                         scale * fraction,
                         scale * eta,
                         n.recon_constant(),
                         std::nullopt};

  const bool by_witness = expectation < 0.0;
  if ((report.verdict == Verdict::detected) != by_witness &&
      std::abs(fraction - eta) > kBoundaryBand) {
    throw std::logic_error("filtering verdict disagrees with tr[rho W] (fraction " +
                           std::to_string(fraction) + ", eta " + std::to_string(eta) +
                           ", tr[rho W] " + std::to_string(expectation) + ")");
  }
  return report;
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = kWilsonZ / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

DetectionReport detect_shots(const DensityOperator& rho, const NetworkState& n, const Witness& w,
                             const ShotOptions& options) {
  if (options.shots < 1) throw std::invalid_argument("detect_shots: shots must be >= 1");
  if (options.batch_size < 1) throw std::invalid_argument("detect_shots: batch_size must be >= 1");
  DetectionReport report = detect_exact(rho, n, w);

  const std::vector<double> bell_cdf = cumulative(bell_outcome_distribution(rho, n));
  const FilterResult filtered = filtering_channel(rho, n);
  const std::vector<double> readout_cdf =
      cumulative(readout_probs(filtered.out.matrix(), n.readout()));

  const std::uint64_t batches = (options.shots + options.batch_size - 1) / options.batch_size;
  std::vector<std::uint64_t> kept(batches, 0);
  std::vector<std::uint64_t> hits(batches, 0);
  auto run_batch = [&](std::uint64_t b) {
    Rng rng(options.seed, b);
    const std::uint64_t begin = b * options.batch_size;
    const std::uint64_t count = std::min(options.batch_size, options.shots - begin);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (rng.sample_cdf(bell_cdf) != 0) continue;
      ++kept[b];
      if (rng.sample_cdf(readout_cdf) == 0) ++hits[b];
    }
  };

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, batches));
  if (workers == 1) {
    for (std::uint64_t b = 0; b < batches; ++b) run_batch(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t b = t; b < batches; b += workers) run_batch(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  ShotSummary summary{};
  summary.n_total = options.shots;
  summary.n_postselected = std::accumulate(kept.begin(), kept.end(), std::uint64_t{0});
  summary.n_target = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  summary.seed = options.seed;
  summary.postselection_rate =
      static_cast<double>(summary.n_postselected) / static_cast<double>(summary.n_total);
  if (summary.n_postselected == 0) {
    summary.estimate = 0.0;
    summary.ci_low = 0.0;
    summary.ci_high = 1.0;
    report.verdict = Verdict::inconclusive;
  } else {
    summary.estimate =
        static_cast<double>(summary.n_target) / static_cast<double>(summary.n_postselected);
    std::tie(summary.ci_low, summary.ci_high) =
        wilson_interval(summary.n_target, summary.n_postselected);
    report.verdict = summary.estimate > report.eta ? Verdict::detected : Verdict::not_detected;
  }
  report.shots = summary;
  return report;
}

}  // namespace netwit
