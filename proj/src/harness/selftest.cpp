// Copyright 2026 The qdenoise Authors
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

#include "qdenoise/harness/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qdenoise/circuits/amplification.hpp"
#include "qdenoise/circuits/qft.hpp"
#include "qdenoise/circuits/qwt.hpp"
#include "qdenoise/encoding/quantum_encoding.hpp"
#include "qdenoise/noise/noise.hpp"
#include "qdenoise/pipeline/denoise.hpp"
#include "qdenoise/verify/reference.hpp"

namespace qdenoise::harness {
namespace {

using verify::Complex;

std::vector<int> range(int n) {
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

double max_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> random_signal(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> y(n);
  for (auto& v : y) v = u(rng);
  return y;
}

// Denoisers are compared on decoded amplitudes: the final acos amplifies
// rounding next to c = 1 and would test the decoder's conditioning instead.
std::vector<double> real_parts(std::span<const Complex> amps) {
  std::vector<double> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) out[i] = amps[i].real();
  return out;
}

SelftestCase check(std::string name, double worst, double tolerance, std::string detail = {}) {
  return {std::move(name), worst, tolerance, worst <= tolerance, std::move(detail)};
}

}  // namespace

std::vector<SelftestCase> run_selftest(std::uint64_t seed) {
  std::vector<SelftestCase> cases;
  std::mt19937_64 rng(seed);

  {
    double worst = 0.0;
    for (int m = 1; m <= 6; ++m) {
      const auto q = range(m);
      const auto u = verify::circuit_unitary(circuits::build_qft(q, false), m);
      const auto ui = verify::circuit_unitary(circuits::build_qft(q, true), m);
      const std::size_t M = std::size_t{1} << m;
      worst = std::max(worst, verify::max_abs_diff(u, verify::dft_matrix(M)));
      worst = std::max(worst, verify::max_abs_diff(verify::multiply(ui, u), verify::identity(M)));
    }
    cases.push_back(check("qft circuit equals dft matrix (m <= 6)", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
      const auto q = range(n);
      for (int levels = 1; levels <= n; ++levels) {
        const auto u = verify::circuit_unitary(circuits::build_qwt_haar(q, levels, false), n);
        const std::size_t N = std::size_t{1} << n;
        verify::Matrix ref{N, std::vector<Complex>(N * N)};
        for (std::size_t col = 0; col < N; ++col) {
          std::vector<Complex> e(N);
          e[col] = 1.0;
          const auto h = verify::haar_forward(e, levels);
          for (std::size_t row = 0; row < N; ++row) ref(row, col) = h[row];
        }
        worst = std::max(worst, verify::max_abs_diff(u, ref));
      }
    }
    cases.push_back(check("haar qwt circuit equals classical pyramid (n <= 6)", worst, 1e-12));
  }

  {
    double worst = 0.0;
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + trial % 7;
      const std::size_t N = std::size_t{1} << n;
      std::vector<Complex> amps(N);
      double norm = 0.0;
      for (auto& a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
      }
      for (auto& a : amps) a /= std::sqrt(norm);
      std::vector<char> marked(N, 0);
      std::bernoulli_distribution pick(0.1);
      for (auto& m : marked) m = pick(rng) ? 1 : 0;
      marked[rng() % N] = 1;
      const auto pred = circuits::OraclePredicate::from_set(marked);
      auto state = sim::StateVector::from_amplitudes(amps);
      const double p0 = circuits::marked_probability(state, pred);
      const auto reference = state;
      for (int r = 1; r <= 4; ++r) {
        circuits::amplitude_amplify(state, pred, 1, reference);
        worst = std::max(worst, std::abs(circuits::marked_probability(state, pred) -
                                         verify::grover_probability(p0, r)));
      }
    }
    cases.push_back(check("amplification follows sin^2((2r+1) theta)", worst, 1e-9));
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const int m = 1 + trial % 4;
      const int p = trial % 4;
      const int a = 2 + trial % 5;
      const std::size_t N = std::size_t{1} << (m + p);
      const auto y = random_signal(N, rng);
      const auto sig = encoding::segment_and_quantize(y, std::uint64_t{1} << p,
                                                      std::uint64_t{1} << m, a, m);
      const auto stats = encoding::compute_stats(sig, encoding::ThresholdRule::constant(0));
      const auto state = encoding::prepare_state(sig, stats);
      const auto decoded = encoding::decode_signal(state, sig, stats);
      std::vector<double> codes(sig.quantized.begin(), sig.quantized.end());
      worst = std::max(worst, max_diff(decoded.codes, codes));
    }
    cases.push_back(check("decode(prepare(x)) recovers quantized codes", worst, 1e-9));
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
      pipeline::DenoiseConfig cfg;
      cfg.m = 3 + trial % 2;
      cfg.p = 2;
      cfg.a = 6;
      cfg.b = cfg.m;
      cfg.threshold_rule = encoding::ThresholdRule::linear(0, 1 << (cfg.m - 1), 32);
      const auto y = random_signal(cfg.length(), rng);
      const auto out = pipeline::denoise_proposed(y, cfg);
      const auto sig = encoding::segment_and_quantize(y, cfg.window_count(), cfg.window_size(),
                                                      cfg.a, cfg.b);
      const auto stats = encoding::compute_stats(sig, cfg.rule());
      const auto ref = real_parts(verify::windowed_threshold(
          verify::encoded_amplitudes(sig), cfg.window_size(), stats.thresholds, cfg.oracle_mode));
      worst = std::max(worst, max_diff(out.amplitudes, ref));
    }
    cases.push_back(check("proposed method equals windowed dft thresholding", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (double keep : {0.125, 0.25, 0.5, 1.0}) {
      pipeline::DenoiseConfig cfg;
      cfg.m = 3;
      cfg.p = 3;
      cfg.a = 6;
      cfg.b = 3;
      cfg.baseline_keep_fraction = keep;
      const auto y = random_signal(cfg.length(), rng);
      const auto sig = encoding::segment_and_quantize(y, cfg.window_count(), cfg.window_size(),
                                                      cfg.a, cfg.b);
      const auto amps = verify::encoded_amplitudes(sig);
      const auto N = cfg.length();
      const auto qft_ref =
          real_parts(verify::global_dft_threshold(amps, pipeline::qft_keep_radius(keep, N)));
      worst =
          std::max(worst, max_diff(pipeline::denoise_baseline_qft(y, cfg).amplitudes, qft_ref));
      const int n = cfg.m + cfg.p;
      const auto kept = pipeline::kept_coefficients(keep, N);
      for (auto depth : {pipeline::QwtDepth::full, pipeline::QwtDepth::minimal}) {
        cfg.qwt_depth = depth;
        const int levels =
            depth == pipeline::QwtDepth::full ? n : pipeline::qwt_levels_for(keep, n);
        const auto qwt_ref = real_parts(verify::global_haar_threshold(amps, levels, kept));
        worst = std::max(worst,
                         max_diff(pipeline::denoise_baseline_qwt(y, cfg).amplitudes, qwt_ref));
      }
    }
    cases.push_back(check("baselines equal classical transform thresholding", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (auto method : {pipeline::Method::proposed, pipeline::Method::qft, pipeline::Method::qwt}) {
      pipeline::DenoiseConfig cfg;
      cfg.m = 3;
      cfg.p = 2;
      cfg.a = 4;
      cfg.b = 3;
      cfg.threshold_rule = encoding::ThresholdRule::linear(1, 2, 8);
      cfg.noise.phase_epsilon = 0.1;
      cfg.noise.bit_flip = 0.2;
      cfg.noise.seed = 11;
      const auto y = random_signal(cfg.length(), rng);
      cfg.backend = pipeline::Backend::compact;
      const auto compact = pipeline::denoise(method, y, cfg);
      cfg.backend = pipeline::Backend::full;
      const auto full = pipeline::denoise(method, y, cfg);
      worst = std::max(worst, max_diff(compact.denoised, full.denoised));
    }
    cases.push_back(check("compact backend equals full register under noise", worst, 1e-12));
  }
  return cases;
}

}  // namespace qdenoise::harness
