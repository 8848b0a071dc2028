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

#include "qdenoise/verify/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdenoise/sim/state_vector.hpp"

namespace qdenoise::verify {

Matrix dft_matrix(std::size_t M, bool inverse) {
  Matrix f{M, std::vector<Complex>(M * M)};
  const double norm = 1.0 / std::sqrt(static_cast<double>(M));
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t k = 0; k < M; ++k) {
    for (std::size_t x = 0; x < M; ++x) {
      // Reduce x*k mod M first so the angle stays small and exact.
      const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>((x * k) % M) /
                           static_cast<double>(M);
      f(k, x) = std::polar(norm, angle);
    }
  }
  return f;
}

Matrix circuit_unitary(const sim::Circuit& circuit, int num_qubits) {
  const std::size_t n = std::size_t{1} << num_qubits;
  Matrix u{n, std::vector<Complex>(n * n)};
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Complex> basis(n);
    basis[col] = 1.0;
    auto state = sim::StateVector::from_amplitudes(std::move(basis));
    sim::apply_circuit(state, circuit);
    const auto amps = state.amplitudes();
    for (std::size_t row = 0; row < n; ++row) u(row, col) = amps[row];
  }
  return u;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  Matrix c{a.n, std::vector<Complex>(a.n * a.n)};
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t k = 0; k < a.n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < a.n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  }
  return worst;
}

Matrix identity(std::size_t n) {
  Matrix m{n, std::vector<Complex>(n * n)};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Complex> dft(std::span<const Complex> x, bool inverse) {
  const auto f = dft_matrix(x.size(), inverse);
  std::vector<Complex> y(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t j = 0; j < x.size(); ++j) y[k] += f(k, j) * x[j];
  }
  return y;
}

std::vector<Complex> haar_forward(std::span<const Complex> x, int levels) {
  std::vector<Complex> y(x.begin(), x.end());
  std::size_t len = y.size();
  const double r = 1.0 / std::numbers::sqrt2;
  for (int level = 0; level < levels; ++level) {
    if (len < 2) throw std::invalid_argument("too many Haar levels");
    std::vector<Complex> next(len);
    for (std::size_t i = 0; i < len / 2; ++i) {
      next[i] = r * (y[2 * i] + y[2 * i + 1]);
      next[len / 2 + i] = r * (y[2 * i] - y[2 * i + 1]);
    }
    std::copy(next.begin(), next.end(), y.begin());
    len /= 2;
  }
  return y;
}

std::vector<Complex> haar_inverse(std::span<const Complex> x, int levels) {
  std::vector<Complex> y(x.begin(), x.end());
  const double r = 1.0 / std::numbers::sqrt2;
  std::size_t len = y.size() >> (levels - 1);
  for (int level = 0; level < levels; ++level) {
    std::vector<Complex> next(len);
    for (std::size_t i = 0; i < len / 2; ++i) {
      next[2 * i] = r * (y[i] + y[len / 2 + i]);
      next[2 * i + 1] = r * (y[i] - y[len / 2 + i]);
    }
    std::copy(next.begin(), next.end(), y.begin());
    len *= 2;
  }
  return y;
}

double grover_probability(double p0, int rounds) {
  const double s = std::sin((2.0 * rounds + 1.0) * std::asin(std::sqrt(p0)));
  return s * s;
}

std::vector<Complex> encoded_amplitudes(const encoding::SegmentedSignal& sig) {
  std::vector<Complex> c(sig.quantized.size());
  const double top = static_cast<double>(std::uint64_t{1} << sig.a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = std::cos(std::numbers::pi * sig.quantized[i] / top);
  }
  return c;
}

std::vector<double> decode_amplitudes(std::span<const Complex> amps,
                                      const encoding::SegmentedSignal& sig) {
  std::vector<double> out(amps.size());
  const double top = static_cast<double>(std::uint64_t{1} << sig.a);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double c = std::clamp(amps[i].real(), -1.0, 1.0);
    out[i] = sig.scale.to_value(top / std::numbers::pi * std::acos(c));
  }
  return out;
}

std::vector<Complex> windowed_threshold(std::span<const Complex> x, std::uint64_t M,
                                        std::span<const int> thresholds,
                                        circuits::OracleMode mode) {
  std::vector<Complex> out(x.size());
  for (std::size_t j = 0; j * M < x.size(); ++j) {
    auto spectrum = dft(x.subspan(j * M, M));
    for (std::uint64_t k = 0; k < M; ++k) {
      const std::uint64_t dist = mode == circuits::OracleMode::symmetric ? std::min(k, M - k) : k;
      if (dist > static_cast<std::uint64_t>(thresholds[j])) spectrum[k] = 0.0;
    }
    const auto back = dft(spectrum, true);
    std::copy(back.begin(), back.end(), out.begin() + static_cast<std::ptrdiff_t>(j * M));
  }
  return out;
}

std::vector<Complex> global_dft_threshold(std::span<const Complex> x, std::uint64_t radius) {
  auto spectrum = dft(x);
  const std::uint64_t N = x.size();
  for (std::uint64_t k = 0; k < N; ++k) {
    if (std::min(k, N - k) > radius) spectrum[k] = 0.0;
  }
  return dft(spectrum, true);
}

std::vector<Complex> global_haar_threshold(std::span<const Complex> x, int levels,
                                           std::uint64_t kept) {
  auto coeffs = haar_forward(x, levels);
  for (std::size_t k = kept; k < coeffs.size(); ++k) coeffs[k] = 0.0;
  return haar_inverse(coeffs, levels);
}

}  // namespace qdenoise::verify
