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
#include <numbers>
#include <numeric>
#include <random>

#include "qdenoise/circuits/amplification.hpp"
#include "qdenoise/circuits/oracle.hpp"
#include "qdenoise/circuits/qft.hpp"
#include "qdenoise/circuits/qwt.hpp"
#include "qdenoise/errors.hpp"
#include "qdenoise/verify/reference.hpp"
#include "test_support.hpp"

using namespace qdenoise;
using namespace qdenoise::circuits;
using sim::Complex;
using sim::StateVector;

namespace {
std::vector<int> iota_qubits(int m) {
  std::vector<int> q(static_cast<std::size_t>(m));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

double marked_mass(const StateVector& s, const std::vector<char>& marked) {
  double p = 0.0;
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    if (marked[i]) p += std::norm(s[i]);
  }
  return p;
}

std::vector<char> random_marks(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.3);
  std::vector<char> marked(n);
  for (auto& m : marked) m = coin(rng);
  marked[rng() % n] = 1;
  return marked;
}
}  // namespace

TEST_SUITE("qft") {
  TEST_CASE("small examples") {
    StateVector one(1);
    apply_circuit(one, build_qft(iota_qubits(1), false));
    CHECK(std::abs(one[0] - Complex{1 / std::sqrt(2.0)}) < 1e-15);
    CHECK(std::abs(one[1] - Complex{1 / std::sqrt(2.0)}) < 1e-15);

    auto two = StateVector::from_amplitudes({0.0, 1.0, 0.0, 0.0});
    apply_circuit(two, build_qft(iota_qubits(2), false));
    const std::vector<Complex> expected{0.5, {0.0, 0.5}, -0.5, {0.0, -0.5}};
    CHECK(qdtest::max_diff(expected, two.amplitudes()) < 1e-15);
  }

  TEST_CASE("unitary equals the DFT matrix for m <= 6") {
    for (int m = 1; m <= 6; ++m) {
      CAPTURE(m);
      const std::size_t M = std::size_t{1} << m;
      const auto fwd = verify::circuit_unitary(build_qft(iota_qubits(m), false), m);
      const auto inv = verify::circuit_unitary(build_qft(iota_qubits(m), true), m);
      CHECK(verify::max_abs_diff(fwd, verify::dft_matrix(M)) < 1e-10);
      CHECK(verify::max_abs_diff(inv, verify::dft_matrix(M, true)) < 1e-10);
      CHECK(verify::max_abs_diff(verify::multiply(inv, fwd), verify::identity(M)) < 1e-10);
    }
  }

  TEST_CASE("layout form acts on the I register only") {
    const sim::RegisterLayout layout{2, 1, 1, 1};
    const auto c = build_qft(layout, false);
    for (const auto& g : c.gates) {
      for (int q : sim::qubits_of(g)) CHECK((q >= 1 && q <= 2));
      CHECK(g.tag == sim::NoiseTag::transform);
    }
  }

  TEST_CASE("gate count is m + m(m-1)/2 + floor(m/2)") {
    for (int m = 1; m <= 10; ++m) {
      const std::size_t expected = m + m * (m - 1) / 2 + m / 2;
      CHECK(qft_gate_count(m) == expected);
      CHECK(build_qft(iota_qubits(m), false).gates.size() == expected);
      CHECK(build_qft(iota_qubits(m), true).gates.size() == expected);
    }
    CHECK_THROWS(build_qft(std::vector<int>{}, false));
  }
}

TEST_SUITE("qwt") {
  TEST_CASE("examples") {
    auto s = StateVector::from_amplitudes({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}, std::sqrt(2.0));
    apply_circuit(s, build_qwt_haar(iota_qubits(1), 1, false));
    CHECK(s.norm_scale() * std::abs(s[0]) == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(s[1]) < 1e-15);

    const std::vector<Complex> in{0.1, 0.7, -0.4, 0.5};
    const double n = std::sqrt(0.01 + 0.49 + 0.16 + 0.25);
    std::vector<Complex> unit(in);
    for (auto& x : unit) x /= n;
    auto t = StateVector::from_amplitudes(unit);
    apply_circuit(t, build_qwt_haar(iota_qubits(2), 1, false));
    const double r = 1 / std::sqrt(2.0);
    const std::vector<Complex> expected{(unit[0] + unit[1]) * r, (unit[2] + unit[3]) * r,
                                        (unit[0] - unit[1]) * r, (unit[2] - unit[3]) * r};
    CHECK(qdtest::max_diff(expected, t.amplitudes()) < 1e-15);
  }

  TEST_CASE("matches the classical orthonormal Haar transform for every depth") {
    std::mt19937_64 rng(11);
    for (int m = 1; m <= 6; ++m) {
      const std::size_t M = std::size_t{1} << m;
      for (int levels = 1; levels <= m; ++levels) {
        CAPTURE(m);
        CAPTURE(levels);
        const auto fwd = verify::circuit_unitary(build_qwt_haar(iota_qubits(m), levels, false), m);
        const auto inv = verify::circuit_unitary(build_qwt_haar(iota_qubits(m), levels, true), m);
        CHECK(verify::max_abs_diff(verify::multiply(inv, fwd), verify::identity(M)) < 1e-10);
        const auto x = qdtest::random_amplitudes(M, rng);
        auto s = StateVector::from_amplitudes(x);
        apply_circuit(s, build_qwt_haar(iota_qubits(m), levels, false));
        CHECK(qdtest::max_diff(verify::haar_forward(x, levels), s.amplitudes()) < 1e-10);
      }
    }
  }

  TEST_CASE("level bounds") {
    CHECK_THROWS_AS(build_qwt_haar(iota_qubits(3), 0, false), std::invalid_argument);
    CHECK_THROWS_AS(build_qwt_haar(iota_qubits(3), 4, false), std::invalid_argument);
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("threshold enumerations") {
    CHECK(marked_count(OracleMode::symmetric, 1, 8) == 3);
    CHECK(marked_count(OracleMode::literal, 1, 8) == 2);
    for (std::uint64_t k = 0; k < 8; ++k) {
      CHECK(threshold_condition(OracleMode::symmetric, k, 1, 8) == (k == 0 || k == 1 || k == 7));
      CHECK(threshold_condition(OracleMode::literal, k, 1, 8) == (k <= 1));
    }
    for (std::uint64_t M : {2u, 8u, 32u}) {
      for (std::uint64_t tau = 0; tau < M; ++tau) {
        std::uint64_t sym = 0, lit = 0;
        for (std::uint64_t k = 0; k < M; ++k) {
          sym += std::min(k, M - k) <= tau;
          lit += k <= tau;
        }
        CHECK(marked_count(OracleMode::symmetric, tau, M) == sym);
        CHECK(marked_count(OracleMode::literal, tau, M) == lit);
      }
    }
  }

  TEST_CASE("tau register at M-1 marks every I value") {
    const sim::RegisterLayout layout{2, 1, 1, 2};
    std::mt19937_64 rng(12);
    for (auto mode : {OracleMode::symmetric, OracleMode::literal}) {
      auto s = qdtest::random_state(layout.total_qubits(), rng);
      const auto before = std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
      apply_oracle(s, OraclePredicate::from_layout(mode, layout));
      for (std::uint64_t idx = 0; idx < s.size(); ++idx) {
        const auto f = layout.decompose(idx);
        if (f.thre == 3) CHECK(std::abs(s[idx] + before[idx]) < 1e-15);
      }
    }
  }

  TEST_CASE("flip set matches the predicate and is an involution") {
    const sim::RegisterLayout layout{3, 1, 1, 3};
    std::mt19937_64 rng(13);
    auto s = qdtest::random_state(layout.total_qubits(), rng);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    const auto pred = OraclePredicate::from_layout(OracleMode::symmetric, layout);
    apply_oracle(s, pred);
    for (std::uint64_t idx = 0; idx < s.size(); ++idx) {
      const auto f = layout.decompose(idx);
      const bool marked = std::min<std::uint64_t>(f.i, 8 - f.i) <= f.thre;
      CHECK(std::abs(s[idx] - (marked ? -before[idx] : before[idx])) == 0.0);
    }
    apply_oracle(s, pred);
    CHECK(qdtest::max_diff(before, s.amplitudes()) == 0.0);
  }

  TEST_CASE("table predicate reads thresholds per segment") {
    const auto pred = OraclePredicate::from_table(OracleMode::literal, 0, 2, 2, 1, {0, 2});
    // j = 0: tau 0 marks k = 0; j = 1: tau 2 marks k <= 2
    CHECK(pred(0b000));
    CHECK_FALSE(pred(0b001));
    CHECK(pred(0b110));
    CHECK_FALSE(pred(0b111));
    CHECK_THROWS_AS(OraclePredicate::from_table(OracleMode::literal, 0, 2, 2, 1, {0}),
                    std::invalid_argument);
  }

  TEST_CASE("set predicate size checks") {
    auto pred = OraclePredicate::from_set({1, 0, 0, 1});
    StateVector s(3);
    CHECK_THROWS_AS(apply_oracle(s, pred), DimensionError);
    CHECK_THROWS_AS(marked_probability(s, pred), DimensionError);
    CHECK(marked_probability(StateVector(2), pred) == 1.0);
  }
}

TEST_SUITE("amplification") {
  TEST_CASE("iteration count examples") {
    CHECK(grover_iteration_count(1.0) == 0);
    CHECK(grover_iteration_count(0.25) == 1);
    CHECK(grover_iteration_count(0.5) == 1);
    CHECK_THROWS_AS(grover_iteration_count(0.0), DomainError);
    CHECK_THROWS_AS(grover_iteration_count(-0.1), DomainError);
    for (double p : {0.01, 0.03, 0.1, 0.2, 0.4, 0.7}) {
      const double th = std::asin(std::sqrt(p));
      int best = 0;
      for (int r = 1; (2 * r + 1) * th < std::numbers::pi; ++r) {
        if (std::sin((2 * r + 1) * th) * std::sin((2 * r + 1) * th) >
            std::sin((2 * best + 1) * th) * std::sin((2 * best + 1) * th))
          best = r;
      }
      CHECK(grover_iteration_count(p) == best);
    }
  }

  TEST_CASE("textbook examples") {
    std::mt19937_64 rng(14);
    auto s = qdtest::random_state(3, rng);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    amplitude_amplify(s, OraclePredicate::from_set({1, 0, 0, 0, 0, 0, 0, 0}), 0);
    CHECK(qdtest::max_diff(before, s.amplitudes()) == 0.0);

    auto u2 = StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5});
    amplitude_amplify(u2, OraclePredicate::from_set({0, 0, 1, 0}), 1);
    CHECK(std::abs(std::abs(u2[2]) - 1.0) < 1e-12);
    CHECK(std::abs(u2[0]) + std::abs(u2[1]) + std::abs(u2[3]) < 1e-12);

    const double q = 1 / std::sqrt(8.0);
    auto u3 = StateVector::from_amplitudes(std::vector<Complex>(8, q));
    const auto pred = OraclePredicate::from_set({0, 1, 0, 0, 0, 0, 1, 0});
    const int r = grover_iteration_count(marked_probability(u3, pred));
    CHECK(r == 1);
    amplitude_amplify(u3, pred, r);
    CHECK(std::abs(marked_probability(u3, pred) - 1.0) < 1e-12);
    CHECK_THROWS_AS(amplitude_amplify(u3, pred, -1), DomainError);
  }

  TEST_CASE("closed form and marked-subspace shape on random states") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + trial % 4;
      const auto marked = random_marks(std::size_t{1} << n, rng);
      auto s = qdtest::random_state(n, rng);
      const auto pred = OraclePredicate::from_set(marked);
      const double p0 = marked_mass(s, marked);
      if (p0 >= 1.0 - 1e-12) continue;
      const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
      const int r = 1 + trial % 5;
      amplitude_amplify(s, pred, r);
      CHECK(std::abs(marked_mass(s, marked) - verify::grover_probability(p0, r)) < 1e-9);
      // marked amplitudes are one common complex multiple of the originals
      std::size_t anchor = 0;
      for (std::size_t i = 0; i < marked.size(); ++i) {
        if (marked[i] && std::abs(before[i]) > std::abs(before[anchor]) * (marked[anchor] ? 1 : 0))
          anchor = i;
      }
      const Complex ratio = s[anchor] / before[anchor];
      for (std::size_t i = 0; i < marked.size(); ++i) {
        if (marked[i]) CHECK(std::abs(s[i] - ratio * before[i]) < 1e-9);
      }
    }
  }

  TEST_CASE("marked probability rises monotonically up to the optimum") {
    std::mt19937_64 rng(16);
    auto base = qdtest::random_state(6, rng);
    std::vector<char> marked(64, 0);
    for (int i = 0; i < 3; ++i) marked[static_cast<std::size_t>(i * 17)] = 1;
    const auto pred = OraclePredicate::from_set(marked);
    const double p0 = marked_mass(base, marked);
    const int best = grover_iteration_count(p0);
    REQUIRE(best >= 2);
    double prev = p0;
    for (int r = 1; r <= best; ++r) {
      auto s = base;
      amplitude_amplify(s, pred, r);
      const double p = marked_mass(s, marked);
      CHECK(p > prev);
      prev = p;
    }
  }

  TEST_CASE("explicit reference equals the default one") {
    std::mt19937_64 rng(17);
    auto a = qdtest::random_state(4, rng);
    auto b = a;
    const auto ref = a;
    const auto pred = OraclePredicate::from_set(random_marks(16, rng));
    amplitude_amplify(a, pred, 2);
    amplitude_amplify(b, pred, 2, ref);
    CHECK(qdtest::max_diff(std::vector<Complex>(a.amplitudes().begin(), a.amplitudes().end()), b.amplitudes()) == 0.0);
  }

  TEST_CASE("exact amplification lands on the normalized projection") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 5;
      const auto marked = random_marks(std::size_t{1} << n, rng);
      auto s = qdtest::random_state(n, rng);
      const auto pred = OraclePredicate::from_set(marked);
      const double p0 = marked_mass(s, marked);
      std::vector<Complex> expected(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) expected[i] = marked[i] ? s[i] / std::sqrt(p0) : 0.0;
      const auto report = amplify_exact(s, pred);
      CHECK(report.probability_before == doctest::Approx(p0).epsilon(1e-12));
      CHECK(report.probability_after == doctest::Approx(1.0).epsilon(1e-9));
      // equal up to a global phase
      std::size_t k = 0;
      for (std::size_t i = 0; i < s.size(); ++i) if (std::abs(expected[i]) > std::abs(expected[k])) k = i;
      const Complex phase = s[k] / expected[k];
      CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);
      for (auto& e : expected) e *= phase;
      CHECK(qdtest::max_diff(expected, s.amplitudes()) < 1e-9);
    }
    StateVector z(2);
    CHECK_THROWS_AS(amplify_exact(z, OraclePredicate::from_set({0, 1, 0, 0})), DomainError);
  }

  TEST_CASE("uniform reference spans the chosen register") {
    const StateVector s(4);
    const auto u = uniform_reference(s, 1, 2);
    for (std::uint64_t i = 0; i < 16; ++i) {
      const bool in = (i & ~std::uint64_t{0b0110}) == 0;
      CHECK(std::abs(u[i] - Complex{in ? 0.5 : 0.0}) < 1e-15);
    }
  }
}
