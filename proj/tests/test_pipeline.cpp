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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <numeric>
#include <random>

#include "qdenoise/circuits/amplification.hpp"
#include "qdenoise/circuits/qft.hpp"
#include "qdenoise/encoding/quantum_encoding.hpp"
#include "qdenoise/errors.hpp"
#include "qdenoise/noise/noise.hpp"
#include "qdenoise/pipeline/denoise.hpp"
#include "qdenoise/verify/reference.hpp"
#include "test_support.hpp"

using namespace qdenoise;
using namespace qdenoise::pipeline;
using sim::Complex;

namespace {
constexpr double kPi = std::numbers::pi;

DenoiseConfig small_config(int m, int p, int a) {
  DenoiseConfig cfg;
  cfg.m = m;
  cfg.p = p;
  cfg.a = a;
  cfg.b = m;
  return cfg;
}

// Integer codes spanning [0, 2^(a-1)], so quantization is exact.
std::vector<double> integer_signal(std::size_t n, int a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> code(0, 1 << (a - 1));
  std::vector<double> y(n);
  for (auto& v : y) v = code(rng);
  y[0] = 0;
  y[n - 1] = 1 << (a - 1);
  return y;
}

std::vector<double> real_parts(const std::vector<Complex>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

double snr(const std::vector<double>& ref, const std::vector<double>& est) {
  double s = 0.0, e = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    s += ref[i] * ref[i];
    e += (ref[i] - est[i]) * (ref[i] - est[i]);
  }
  return 10 * std::log10(s / e);
}

bool same_bytes(const DenoiseResult& a, const DenoiseResult& b) {
  auto eq = [](const std::vector<double>& x, const std::vector<double>& y) {
    return x.size() == y.size() && std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) == 0;
  };
  return eq(a.denoised, b.denoised) && eq(a.amplitudes, b.amplitudes) &&
         a.marked_counts == b.marked_counts && a.iterations_used == b.iterations_used &&
         a.noise_ops_injected == b.noise_ops_injected;
}
}  // namespace

TEST_SUITE("config") {
  TEST_CASE("validation") {
    auto cfg = small_config(3, 2, 4);
    CHECK_NOTHROW(cfg.validate());
    cfg.b = 2;
    CHECK_THROWS(cfg.validate());
    cfg = small_config(3, 2, 4);
    cfg.baseline_keep_fraction = 0.0;
    CHECK_THROWS(cfg.validate());
    cfg.baseline_keep_fraction = 1.5;
    CHECK_THROWS(cfg.validate());
    cfg = small_config(3, 2, 4);
    cfg.noise.bit_flip = 3.0;
    CHECK_THROWS(cfg.validate());
    cfg = small_config(16, 15, 4);
    CHECK_THROWS(cfg.validate());
    std::vector<double> wrong(10, 1.0);
    CHECK_THROWS_AS(denoise_proposed(wrong, small_config(3, 1, 4)), DimensionError);
  }

  TEST_CASE("keep fraction helpers") {
    CHECK(kept_coefficients(0.25, 64) == 16);
    CHECK(kept_coefficients(1e-9, 64) == 1);
    CHECK(kept_coefficients(1.0, 64) == 64);
    CHECK(qft_keep_radius(1.0, 64) == 32);
    CHECK(qft_keep_radius(5.0 / 64, 64) == 2);
    CHECK(qwt_levels_for(0.5, 6) == 1);
    CHECK(qwt_levels_for(0.125, 6) == 3);
    CHECK(qwt_levels_for(1.0, 6) == 1);
    CHECK(qwt_levels_for(1e-6, 6) == 6);
    // the symmetric radius never keeps more than the requested count
    for (std::uint64_t c = 1; c <= 64; ++c) {
      const auto r = qft_keep_radius(static_cast<double>(c) / 64, 64);
      const auto kept = std::min<std::uint64_t>(64, 2 * r + 1);
      CHECK(kept <= std::max<std::uint64_t>(c, 1));
    }
  }

  TEST_CASE("enum names round-trip") {
    for (auto m : {Method::proposed, Method::qft, Method::qwt, Method::none})
      CHECK(parse_method(to_string(m)) == m);
    for (auto b : {Backend::compact, Backend::full}) CHECK(parse_backend(to_string(b)) == b);
    for (auto d : {QwtDepth::full, QwtDepth::minimal}) CHECK(parse_qwt_depth(to_string(d)) == d);
    CHECK_THROWS(parse_method("wavelet"));
  }
}

TEST_SUITE("proposed method") {
  TEST_CASE("keeping every frequency is the identity") {
    std::mt19937_64 rng(41);
    for (auto backend : {Backend::compact, Backend::full}) {
      auto cfg = small_config(3, 2, 5);
      cfg.backend = backend;
      cfg.threshold_rule = encoding::ThresholdRule::constant(7);
      const auto y = integer_signal(cfg.length(), cfg.a, rng);
      const auto out = denoise_proposed(y, cfg);
      CHECK(out.iterations_used == 0);
      CHECK(out.marked_probability_before == doctest::Approx(1.0));
      CHECK(qdtest::max_diff(y, out.denoised) < 1e-8);
    }
  }

  TEST_CASE("single window with zero rounds equals the classical dft round trip") {
    std::mt19937_64 rng(42);
    auto cfg = small_config(4, 0, 6);
    cfg.threshold_rule = encoding::ThresholdRule::constant(2);
    cfg.amplification = AmplificationMode::standard;
    cfg.forced_iterations = 0;
    const auto y = integer_signal(cfg.length(), cfg.a, rng);
    const auto out = denoise_proposed(y, cfg);
    const auto sig = encoding::segment_and_quantize(y, 1, 16, cfg.a, cfg.b);
    const std::vector<int> all{15};
    const auto ref = real_parts(verify::windowed_threshold(verify::encoded_amplitudes(sig), 16, all,
                                                           circuits::OracleMode::symmetric));
    CHECK(out.iterations_used == 0);
    CHECK(qdtest::max_diff(ref, out.amplitudes) < 1e-12);
    CHECK(qdtest::max_diff(y, out.denoised) < 1e-8);
  }

  TEST_CASE("exact amplification equals windowed dft thresholding") {
    std::mt19937_64 rng(43);
    for (auto mode : {circuits::OracleMode::symmetric, circuits::OracleMode::literal}) {
      for (int tau : {0, 1, 3}) {
        auto cfg = small_config(3, 3, 6);
        cfg.oracle_mode = mode;
        cfg.threshold_rule = encoding::ThresholdRule::constant(tau);
        const auto y = integer_signal(cfg.length(), cfg.a, rng);
        const auto out = denoise_proposed(y, cfg);
        const auto sig = encoding::segment_and_quantize(y, 8, 8, cfg.a, cfg.b);
        const std::vector<int> taus(8, tau);
        const auto ref =
            real_parts(verify::windowed_threshold(verify::encoded_amplitudes(sig), 8, taus, mode));
        CHECK(qdtest::max_diff(ref, out.amplitudes) < 1e-10);
        for (auto mj : out.marked_counts) CHECK(mj == circuits::marked_count(mode, tau, 8));
      }
    }
  }

  // Number of 100 seeded AWGN trials (15 dB) where the proposed method raises the SNR of
  // one cosine per window with the given DC offset; symmetric oracle, tau = 1.
  int cosine_improvements(double offset) {
    DenoiseConfig cfg;  // m = 5, p = 5, a = 8, b = 5
    cfg.threshold_rule = encoding::ThresholdRule::constant(1);
    const auto N = cfg.length();
    std::vector<double> clean(N);
    for (std::size_t i = 0; i < N; ++i)
      clean[i] = offset + std::cos(2 * kPi * static_cast<double>(i % 32) / 32);
    int improved = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
      std::mt19937_64 rng(noise::derive_seed(44, t));
      const auto noisy = noise::add_awgn(clean, 15.0, rng);
      const auto out = denoise_proposed(noisy, cfg);
      improved += snr(clean, out.denoised) > snr(clean, noisy);
    }
    return improved;
  }

  TEST_CASE("zero-mean cosine under awgn improves in at least 95 of 100 trials") {
    CHECK(cosine_improvements(0.0) >= 95);
  }

  TEST_CASE("offset cosine under awgn improves in at least 95 of 100 trials") {
    CHECK(cosine_improvements(2.0) >= 95);
  }

  TEST_CASE("standard amplification raises the marked probability") {
    std::mt19937_64 rng(45);
    for (auto iter : {IterationMode::oracle_exact, IterationMode::count_formula}) {
      auto cfg = small_config(4, 2, 6);
      cfg.amplification = AmplificationMode::standard;
      cfg.iteration_mode = iter;
      cfg.oracle_mode = circuits::OracleMode::literal;
      cfg.threshold_rule = encoding::ThresholdRule::constant(0);
      // One unit amplitude in every four samples puts about a quarter of the energy at DC.
      std::uniform_int_distribution<int> jitter(0, 3);
      std::vector<double> y(cfg.length());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = i % 4 ? 32 - jitter(rng) : jitter(rng);
      y[0] = 0;
      y[1] = 32;
      const auto out = denoise_proposed(y, cfg);
      CHECK(out.marked_probability_before > 0.0);
      CHECK(out.marked_probability_before < 1.0);
      if (iter == IterationMode::oracle_exact) {
        CHECK(out.iterations_used == circuits::grover_iteration_count(out.marked_probability_before));
        REQUIRE(out.iterations_used >= 1);
        CHECK(out.marked_probability_after > out.marked_probability_before);
      }
    }
  }

  TEST_CASE("frequency amplitudes match a per-window dft") {
    std::mt19937_64 rng(46);
    const int m = 4, p = 2;
    const auto y = integer_signal(64, 6, rng);
    const auto sig = encoding::segment_and_quantize(y, 4, 16, 6, m);
    auto state = encoding::prepare_compact_state(sig);
    std::vector<int> iq(m);
    std::iota(iq.begin(), iq.end(), 0);
    sim::apply_circuit(state, circuits::build_qft(iq, false));
    const auto x = verify::encoded_amplitudes(sig);
    const double gain = state.norm_scale() * std::sqrt(64.0);
    double worst = 0.0;
    for (std::size_t j = 0; j < (1u << p); ++j) {
      const std::vector<Complex> seg(x.begin() + 16 * j, x.begin() + 16 * (j + 1));
      const auto beta = verify::dft(seg);
      for (std::size_t k = 0; k < 16; ++k)
        worst = std::max(worst, std::abs(state[16 * j + k] * gain - beta[k]));
    }
    CHECK(worst < 1e-9);
  }

  TEST_CASE("changing one window only changes that window") {
    std::mt19937_64 rng(47);
    auto cfg = small_config(3, 2, 5);
    cfg.threshold_rule = encoding::ThresholdRule::linear(0, 4, 16);
    const auto y = integer_signal(cfg.length(), cfg.a, rng);
    auto z = y;
    for (std::size_t i = 9; i < 15; ++i) z[i] = (static_cast<int>(z[i]) + 5) % 16;  // window 1
    const auto sy = encoding::compute_stats(encoding::segment_and_quantize(y, 4, 8, 5, 3), cfg.rule());
    const auto sz = encoding::compute_stats(encoding::segment_and_quantize(z, 4, 8, 5, 3), cfg.rule());
    for (std::size_t j : {0u, 2u, 3u}) {
      CHECK(sy.means[j] == sz.means[j]);
      CHECK(sy.thresholds[j] == sz.thresholds[j]);
    }
    for (bool forced : {true, false}) {
      auto c = cfg;
      if (forced) {
        c.amplification = AmplificationMode::standard;
        c.forced_iterations = 0;
      }
      const auto a = denoise_proposed(y, c).denoised;
      const auto b = denoise_proposed(z, c).denoised;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i / 8 != 1) CHECK(std::abs(a[i] - b[i]) < 1e-9);
      }
    }
  }

  TEST_CASE("deterministic under noise") {
    std::mt19937_64 rng(48);
    auto cfg = small_config(4, 2, 6);
    cfg.noise.classical = noise::Awgn{12.0};
    cfg.noise.phase_epsilon = 0.1;
    cfg.noise.bit_flip = 0.05;
    cfg.noise.seed = 77;
    const auto y = integer_signal(cfg.length(), cfg.a, rng);
    for (auto method : {Method::proposed, Method::qft, Method::qwt}) {
      const auto a = run_with_noise(method, y, cfg);
      const auto b = run_with_noise(method, y, cfg);
      CHECK(a.noisy == b.noisy);
      CHECK(same_bytes(a.result, b.result));
      CHECK(a.result.noise_ops_injected > 0);
    }
  }
}

TEST_SUITE("qft baseline") {
  TEST_CASE("keep everything is the identity") {
    std::mt19937_64 rng(51);
    auto cfg = small_config(3, 3, 6);
    cfg.baseline_keep_fraction = 1.0;
    const auto y = integer_signal(cfg.length(), cfg.a, rng);
    CHECK(qdtest::max_diff(y, denoise_baseline_qft(y, cfg).denoised) < 1e-8);
  }

  TEST_CASE("a constant signal survives any keep fraction") {
    const std::vector<double> y(64, 5.0);
    for (double keep : {1.0 / 64, 0.125, 0.5}) {
      auto cfg = small_config(3, 3, 6);
      cfg.baseline_keep_fraction = keep;
      CHECK(qdtest::max_diff(y, denoise_baseline_qft(y, cfg).denoised) < 1e-8);
      CHECK(qdtest::max_diff(y, denoise_baseline_qwt(y, cfg).denoised) < 1e-8);
    }
  }

  TEST_CASE("high-frequency contamination is removed exactly") {
    // Amplitudes x = 0.5 + 0.3 cos(2 pi 2 i/N) + 0.2 cos(2 pi 18 i/N) reach exactly 0 and 1,
    // so the affine quantizer maps the codes onto themselves.
    const int a = 20;
    const std::size_t N = 64;
    const double top = std::ldexp(1.0, a);
    std::vector<double> y(N), clean_codes(N);
    for (std::size_t i = 0; i < N; ++i) {
      const double low = 0.5 + 0.3 * std::cos(2 * kPi * 2 * static_cast<double>(i) / N);
      const double x = low + 0.2 * std::cos(2 * kPi * 18 * static_cast<double>(i) / N);
      y[i] = top / kPi * std::acos(std::clamp(x, 0.0, 1.0));
      clean_codes[i] = top / kPi * std::acos(low);
    }
    auto cfg = small_config(3, 3, a);
    cfg.baseline_keep_fraction = 5.0 / 64;  // radius 2
    const auto out = denoise_baseline_qft(y, cfg);
    // no energy outside |k| <= 2 in the output amplitudes
    std::vector<Complex> amps(out.amplitudes.begin(), out.amplitudes.end());
    const auto spectrum = verify::dft(amps);
    for (std::size_t k = 3; k <= N - 3; ++k) CHECK(std::abs(spectrum[k]) < 1e-10);
    // Each input code is off by at most 1/2, so each amplitude by at most pi/2^(a+1);
    // the projection keeps the l2 error below sqrt(N) times that, and acos has slope
    // at most 1/sqrt(1 - 0.8^2) on the clean range [0.2, 0.8].
    const double bound = std::sqrt(static_cast<double>(N)) * 0.5 / std::sqrt(1 - 0.64);
    const auto sig = encoding::segment_and_quantize(y, 1, 64, a, 6);
    for (std::size_t i = 0; i < N; ++i) {
      const double code = (out.denoised[i] - sig.scale.offset) / sig.scale.factor;
      CHECK(std::abs(code - clean_codes[i]) <= bound + 1e-8);
    }
  }

  TEST_CASE("matches the classical dft oracle") {
    std::mt19937_64 rng(52);
    for (double keep : {0.1, 0.25, 0.5}) {
      auto cfg = small_config(3, 3, 6);
      cfg.baseline_keep_fraction = keep;
      std::uniform_real_distribution<double> u(-1, 1);
      std::vector<double> y(64);
      for (auto& v : y) v = u(rng);
      const auto sig = encoding::segment_and_quantize(y, 8, 8, 6, 3);
      const auto ref = real_parts(
          verify::global_dft_threshold(verify::encoded_amplitudes(sig), qft_keep_radius(keep, 64)));
      CHECK(qdtest::max_diff(ref, denoise_baseline_qft(y, cfg).amplitudes) < 1e-10);
    }
  }
}

TEST_SUITE("qwt baseline") {
  TEST_CASE("keep everything is the identity") {
    std::mt19937_64 rng(53);
    for (auto depth : {QwtDepth::full, QwtDepth::minimal}) {
      auto cfg = small_config(3, 3, 6);
      cfg.baseline_keep_fraction = 1.0;
      cfg.qwt_depth = depth;
      const auto y = integer_signal(cfg.length(), cfg.a, rng);
      CHECK(qdtest::max_diff(y, denoise_baseline_qwt(y, cfg).denoised) < 1e-8);
    }
  }

  TEST_CASE("piecewise constants on the kept resolution are reproduced") {
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<int> code(0, 32);
    std::vector<double> y(64);
    for (std::size_t blk = 0; blk < 8; ++blk) {
      const double v = blk == 0 ? 0 : blk == 1 ? 32 : code(rng);
      for (std::size_t i = 0; i < 8; ++i) y[8 * blk + i] = v;
    }
    for (auto depth : {QwtDepth::full, QwtDepth::minimal}) {
      auto cfg = small_config(3, 3, 6);
      cfg.baseline_keep_fraction = 0.125;
      cfg.qwt_depth = depth;
      CHECK(qdtest::max_diff(y, denoise_baseline_qwt(y, cfg).denoised) < 1e-8);
    }
  }

  TEST_CASE("random signal at keep 1/2 matches the classical haar oracle") {
    std::mt19937_64 rng(55);
    std::normal_distribution<double> g;
    std::vector<double> y(64);
    for (auto& v : y) v = g(rng);
    const auto sig = encoding::segment_and_quantize(y, 8, 8, 6, 3);
    const auto amps = verify::encoded_amplitudes(sig);
    for (auto depth : {QwtDepth::full, QwtDepth::minimal}) {
      auto cfg = small_config(3, 3, 6);
      cfg.baseline_keep_fraction = 0.5;
      cfg.qwt_depth = depth;
      const int levels = depth == QwtDepth::full ? 6 : 1;
      const auto ref = real_parts(verify::global_haar_threshold(amps, levels, 32));
      const auto out = denoise_baseline_qwt(y, cfg);
      CHECK(qdtest::max_diff(ref, out.amplitudes) < 1e-8);
      const auto decoded = verify::decode_amplitudes(verify::global_haar_threshold(amps, levels, 32), sig);
      CHECK(qdtest::max_diff(decoded, out.denoised) < 1e-6);
    }
  }
}

TEST_SUITE("backends and noise order") {
  TEST_CASE("compact and full backends agree with and without quantum noise") {
    std::mt19937_64 rng(56);
    auto cfg = small_config(2, 2, 3);
    cfg.b = 2;
    cfg.threshold_rule = encoding::ThresholdRule::linear(0, 2, 4);
    cfg.baseline_keep_fraction = 0.25;
    const auto y = integer_signal(cfg.length(), cfg.a, rng);
    for (bool noisy : {false, true}) {
      if (noisy) {
        cfg.noise.phase_epsilon = 0.2;
        cfg.noise.bit_flip = 0.2;
        cfg.noise.seed = 9;
      }
      for (auto method : {Method::proposed, Method::qft, Method::qwt}) {
        CAPTURE(to_string(method));
        auto full = cfg;
        full.backend = Backend::full;
        auto compact = cfg;
        compact.backend = Backend::compact;
        const auto a = denoise(method, y, full);
        const auto b = denoise(method, y, compact);
        CHECK(a.registers_discarded);
        CHECK(qdtest::max_diff(a.amplitudes, b.amplitudes) < 1e-12);
        CHECK(a.noise_ops_injected == b.noise_ops_injected);
      }
    }
  }

  TEST_CASE("classical noise hits the signal before encoding") {
    std::mt19937_64 rng(57);
    auto cfg = small_config(3, 2, 6);
    cfg.noise.classical = noise::Awgn{10.0};
    cfg.noise.phase_epsilon = 0.1;
    cfg.noise.seed = 123;
    const auto clean = integer_signal(cfg.length(), cfg.a, rng);
    const auto run = run_with_noise(Method::proposed, clean, cfg);
    std::mt19937_64 classical(noise::derive_seed(123, 0));
    const auto expected_noisy = noise::add_awgn(clean, 10.0, classical);
    CHECK(run.noisy == expected_noisy);
    // denoising the noisy signal directly replays the same quantum noise
    CHECK(same_bytes(run.result, denoise_proposed(expected_noisy, cfg)));
  }

  TEST_CASE("method none passes the input through") {
    const std::vector<double> y{1.0, 2.0, -3.0, 0.5, 4.0, 4.0, 0.0, 1.0};
    const auto out = denoise(Method::none, y, small_config(2, 1, 4));
    CHECK(out.denoised == y);
  }
}
