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

#include "qdenoise/sim/register_layout.hpp"

#include <stdexcept>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::sim {
namespace {

std::vector<int> span_of(int offset, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = offset + k;
  return out;
}

std::uint64_t mask(int bits) { return (std::uint64_t{1} << bits) - 1; }

}  // namespace

void RegisterLayout::validate() const {
  if (m < 1) throw std::invalid_argument("register layout: m must be >= 1");
  if (a < 1) throw std::invalid_argument("register layout: a must be >= 1");
  if (p < 0) throw std::invalid_argument("register layout: p must be >= 0");
  if (b < 1) throw std::invalid_argument("register layout: b must be >= 1");
  if (max_qubits < 1 || max_qubits > 40) {
    throw std::invalid_argument("register layout: max_qubits must be in [1, 40]");
  }
  if (total_qubits() > max_qubits) {
    throw CapacityError("register layout needs " + std::to_string(total_qubits()) +
                        " qubits, limit is " + std::to_string(max_qubits));
  }
}

std::vector<int> RegisterLayout::i_qubits() const { return span_of(i_offset(), m); }
std::vector<int> RegisterLayout::mean_qubits() const { return span_of(mean_offset(), a); }
std::vector<int> RegisterLayout::j_qubits() const { return span_of(j_offset(), p); }
std::vector<int> RegisterLayout::thre_qubits() const { return span_of(thre_offset(), b); }

std::uint64_t RegisterLayout::compose(const Fields& f) const {
  std::uint64_t index = has_ancilla ? (f.ancilla & 1U) : 0;
  index |= (f.i & mask(m)) << i_offset();
  index |= (f.mean & mask(a)) << mean_offset();
  index |= (f.j & mask(p)) << j_offset();
  index |= (f.thre & mask(b)) << thre_offset();
  return index;
}

RegisterLayout::Fields RegisterLayout::decompose(std::uint64_t index) const {
  Fields f;
  f.ancilla = has_ancilla ? (index & 1U) : 0;
  f.i = (index >> i_offset()) & mask(m);
  f.mean = (index >> mean_offset()) & mask(a);
  f.j = (index >> j_offset()) & mask(p);
  f.thre = (index >> thre_offset()) & mask(b);
  return f;
}

}  // namespace qdenoise::sim
