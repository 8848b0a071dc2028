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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "qdenoise/circuits/amplification.hpp"
#include "qdenoise/circuits/oracle.hpp"
#include "qdenoise/circuits/qft.hpp"
#include "qdenoise/encoding/quantum_encoding.hpp"
#include "qdenoise/harness/config.hpp"
#include "qdenoise/harness/experiment.hpp"
#include "qdenoise/verify/reference.hpp"

using namespace qdenoise;
using pipeline::Method;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::vector<int> iota_qubits(int m) {
  std::vector<int> q(static_cast<std::size_t>(m));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome qft_equivalence() {
  double worst = 0.0;
  for (int m = 1; m <= 6; ++m) {
    const std::size_t M = std::size_t{1} << m;
    const auto fwd = verify::circuit_unitary(circuits::build_qft(iota_qubits(m), false), m);
    const auto inv = verify::circuit_unitary(circuits::build_qft(iota_qubits(m), true), m);
    worst = std::max(worst, verify::max_abs_diff(fwd, verify::dft_matrix(M)));
    worst = std::max(worst, verify::max_abs_diff(verify::multiply(inv, fwd), verify::identity(M)));
  }
  return {worst <= 1e-10, fmt("worst elementwise deviation %.3g (limit 1e-10)", worst)};
}

sim::StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<sim::Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : amps) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return sim::StateVector::from_amplitudes(std::move(amps));
}

Outcome grover_closed_form() {
  std::mt19937_64 rng(2);
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 10;
    const std::size_t size = std::size_t{1} << n;
    std::bernoulli_distribution coin(0.2);
    std::vector<char> marked(size);
    for (auto& m : marked) m = coin(rng);
    marked[rng() % size] = 1;
    auto state = random_state(n, rng);
    const auto pred = circuits::OraclePredicate::from_set(marked);
    const double p0 = circuits::marked_probability(state, pred);
    const int rounds = 1 + trial % 6;
    circuits::amplitude_amplify(state, pred, rounds);
    worst = std::max(worst, std::abs(circuits::marked_probability(state, pred) -
                                     verify::grover_probability(p0, rounds)));
  }
  auto four = sim::StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5});
  const auto pred = circuits::OraclePredicate::from_set({0, 0, 0, 1});
  circuits::amplitude_amplify(four, pred, 1);
  const double exact = std::abs(circuits::marked_probability(four, pred) - 1.0);
  return {worst <= 1e-9 && exact <= 1e-12,
          fmt("closed-form deviation %.3g (limit 1e-9), N=4 single-round miss %.3g (limit 1e-12)",
              worst, exact)};
}

Outcome encode_round_trip() {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 4;
    const int p = (trial / 4) % 4;
    const int a = 2 + (trial / 16) % 5;
    const std::size_t n = std::size_t{1} << (m + p);
    const int top = 1 << (a - 1);
    std::uniform_int_distribution<int> code(0, top);
    std::vector<double> y(n);
    for (auto& v : y) v = code(rng);
    y[0] = 0;
    y[n - 1] = top;
    const auto sig = encoding::segment_and_quantize(y, std::size_t{1} << p, std::size_t{1} << m, a);
    const auto stats = encoding::compute_stats(sig, encoding::ThresholdRule::default_for(m, a));
    const auto decoded = encoding::decode_signal(encoding::prepare_state(sig, stats), sig, stats);
    for (std::size_t k = 0; k < n; ++k)
      worst = std::max(worst, std::abs(decoded.codes[k] - sig.quantized[k]));
  }
  return {worst <= 1e-9, fmt("200 instances, worst code error %.3g (limit 1e-9)", worst)};
}

Outcome gate_count() {
  for (int m = 1; m <= 10; ++m) {
    const std::size_t expected = static_cast<std::size_t>(m * (m + 1) / 2 + m / 2);
    const auto built = circuits::build_qft(iota_qubits(m), false).gates.size();
    if (built != expected || circuits::qft_gate_count(m) != expected) {
      return {false, fmt("m=%g: built %g gates, expected %g", m, static_cast<double>(built),
                         static_cast<double>(expected))};
    }
  }
  return {true, "m(m+1)/2 + floor(m/2) for m = 1..10"};
}

double psnr(const harness::ExperimentReport& r, const std::string& scenario, Method method) {
  const auto* row = r.find(scenario, method);
  return row ? row->psnr_out_mean : std::nan("");
}

Outcome awgn(const harness::ExperimentReport& r) {
  const auto* prop = r.find("awgn", Method::proposed);
  if (!prop) return {false, "no awgn/proposed aggregate"};
  const double gain = prop->snr_out_mean - prop->snr_in_mean;
  const double p = prop->psnr_out_mean;
  const double q = psnr(r, "awgn", Method::qft), w = psnr(r, "awgn", Method::qwt);
  const bool ok = gain >= 3.0 && p >= q && p >= w && prop->count >= 50;
  return {ok, fmt("snr gain %.2f dB (need >= 3); psnr proposed %.2f, qft %.2f", gain, p, q) +
                  fmt(", qwt %.2f dB", w)};
}

Outcome phase(const harness::ExperimentReport& r) {
  const double p = psnr(r, "phase", Method::proposed);
  const double q = psnr(r, "phase", Method::qft), w = psnr(r, "phase", Method::qwt);
  const double gap = p - std::max(q, w);
  std::string detail = fmt("psnr proposed %.2f, qft %.2f, qwt %.2f dB", p, q, w) +
                       fmt("; gap over best baseline %.2f dB", gap);
  if (gap < 1.0) detail += " [gap below 1 dB]";
  return {p > q && p > w, detail};
}

Outcome bitflip(const harness::ExperimentReport& r) {
  const double p = psnr(r, "bitflip", Method::proposed);
  const double q = psnr(r, "bitflip", Method::qft), w = psnr(r, "bitflip", Method::qwt);
  return {p > q && q > w,
          fmt("psnr proposed %.2f, qft %.2f, qwt %.2f dB (need proposed > qft > qwt)", p, q, w)};
}

Outcome poisson_mixed(const harness::ExperimentReport& r) {
  bool ok = true;
  std::string detail;
  for (const char* s : {"poisson", "mixed", "poisson-phase"}) {
    const double p = psnr(r, s, Method::proposed);
    const double q = psnr(r, s, Method::qft), w = psnr(r, s, Method::qwt);
    ok = ok && p >= q && p >= w;
    detail += std::string(detail.empty() ? "" : "; ") + s + fmt(" %.2f vs %.2f / %.2f", p, q, w);
  }
  return {ok, detail + " dB"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const harness::ExperimentConfig& cfg, const harness::ExperimentReport& first,
                    const std::filesystem::path& dir) {
  harness::write_report(first, dir / "run1");
  harness::emit_plot_data(first, dir / "run1");
  const auto second = harness::run_experiment(cfg);
  harness::write_report(second, dir / "run2");
  harness::emit_plot_data(second, dir / "run2");
  std::size_t compared = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir / "run1")) {
    if (entry.path().extension() != ".csv") continue;
    const auto rel = std::filesystem::relative(entry.path(), dir / "run1");
    if (rel == "timing.csv") continue;  // wall-clock times, not results
    if (slurp(entry.path()) != slurp(dir / "run2" / rel)) {
      return {false, rel.string() + " differs between runs"};
    }
    ++compared;
  }
  return {compared > 0, fmt("%g csv files byte-identical", static_cast<double>(compared))};
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path out =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path("acceptance_out");
  bool all = true;
  auto report_line = [&](int id, const char* name, double limit_s, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
      o.passed = false;
      o.detail += fmt(" [runtime %.1f s over the %.0f s limit]", secs, limit_s);
    }
    all = all && o.passed;
    std::printf("%s %d %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  };

  report_line(1, "qft equals the dft matrix", 5, qft_equivalence);
  report_line(2, "amplification closed form", 10, grover_closed_form);
  report_line(3, "encode/decode round trip", 30, encode_round_trip);
  report_line(4, "qft gate count", 0, gate_count);

  const auto cfg = harness::profile_config("desk");
  const auto t0 = std::chrono::steady_clock::now();
  harness::ExperimentReport report;
  std::string failure;
  try {
    report = harness::run_experiment(cfg);
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const double experiment_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("desk experiment: %d trials x %zu scenarios in %.2f s, %zu trial errors\n", cfg.trials,
              cfg.scenarios.size(), experiment_s, report.errors);
  auto scenario_check = [&](auto fn) {
    return [&, fn]() -> Outcome {
      if (!failure.empty()) return {false, "experiment failed: " + failure};
      if (report.errors != 0) return {false, "experiment had trial errors"};
      auto o = fn(report);
      if (experiment_s >= 600) {
        o.passed = false;
        o.detail += " [desk experiment over 10 min]";
      }
      return o;
    };
  };
  report_line(5, "awgn 15 dB", 0, scenario_check(awgn));
  report_line(6, "phase noise 0.1", 0, scenario_check(phase));
  report_line(7, "bit-flip ordering", 0, scenario_check(bitflip));
  report_line(8, "poisson and mixed", 0, scenario_check(poisson_mixed));
  report_line(9, "determinism", 0, [&]() -> Outcome {
    if (!failure.empty()) return {false, "experiment failed: " + failure};
    return determinism(cfg, report, out);
  });

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
