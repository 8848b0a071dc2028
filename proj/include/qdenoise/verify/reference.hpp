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

#pragma once

// Brute-force classical references used by the self-test and the test
// suites. Everything here is O(N^2) or worse on purpose: it shares no code
// with the circuit builders it checks.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qdenoise/circuits/oracle.hpp"
#include "qdenoise/encoding/segmented_signal.hpp"
#include "qdenoise/sim/circuit.hpp"

namespace qdenoise::verify {

using Complex = std::complex<double>;

/// Dense row-major square matrix.
struct Matrix {
  std::size_t n = 0;
  std::vector<Complex> data;

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

/// F[k][x] = M^{-1/2} e^{2 pi i x k / M}; `inverse` conjugates.
Matrix dft_matrix(std::size_t M, bool inverse = false);

/// Unitary of `circuit` on `num_qubits` qubits, column by column.
Matrix circuit_unitary(const sim::Circuit& circuit, int num_qubits);

Matrix multiply(const Matrix& a, const Matrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);
Matrix identity(std::size_t n);

/// Unitary DFT of a vector.
std::vector<Complex> dft(std::span<const Complex> x, bool inverse = false);

/// Orthonormal Haar pyramid with `levels` levels in subband order
/// [A_L | D_L | ... | D_1]: a = (x0 + x1)/sqrt2, d = (x0 - x1)/sqrt2.
std::vector<Complex> haar_forward(std::span<const Complex> x, int levels);
std::vector<Complex> haar_inverse(std::span<const Complex> x, int levels);

/// sin^2((2r + 1) asin(sqrt(p0))).
double grover_probability(double p0, int rounds);

/// Encoded amplitudes cos(pi s / 2^a) of a quantized signal, unnormalized.
std::vector<Complex> encoded_amplitudes(const encoding::SegmentedSignal& sig);

/// Inverse of the amplitude encoding for real amplitudes: clamp, acos, and
/// the quantization affine map back to the input scale.
std::vector<double> decode_amplitudes(std::span<const Complex> amps,
                                      const encoding::SegmentedSignal& sig);

/// Per-window DFT, zero frequencies failing the threshold test for that
/// window's tau, inverse DFT.
std::vector<Complex> windowed_threshold(std::span<const Complex> x, std::uint64_t M,
                                        std::span<const int> thresholds,
                                        circuits::OracleMode mode);

/// Global DFT keeping min(k, N - k) <= radius.
std::vector<Complex> global_dft_threshold(std::span<const Complex> x, std::uint64_t radius);

/// Global Haar pyramid keeping the first `kept` coefficients.
std::vector<Complex> global_haar_threshold(std::span<const Complex> x, int levels,
                                           std::uint64_t kept);

}  // namespace qdenoise::verify
