// Copyright 2026 The qmaxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qmaxcut/circuit.hpp"
#include "qmaxcut/layout.hpp"

namespace qmaxcut {

using Amplitude = std::complex<double>;

/// Default dense amplitude budget: 2^26 amplitudes = 1 GiB.
inline constexpr std::uint32_t kDefaultMemoryCapQubits = 26;

/// Dense 2^Q-amplitude state. Qubit q is bit q of the amplitude index
/// (little-endian); display strings are produced at the interface layer.
class StateVector {
 public:
  /// Allocates 2^qubit_count amplitudes in |0...0>. The hard ceiling of 34
  /// qubits only guards the index arithmetic; the memory cap is enforced by
  /// init_state.
  explicit StateVector(std::uint32_t qubit_count);

  std::uint32_t qubit_count() const { return qubit_count_; }
  std::uint64_t dimension() const { return std::uint64_t{1} << qubit_count_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }

  Amplitude amplitude(std::uint64_t index) const { return amps_[index]; }
  void set_basis(std::uint64_t index);

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  double norm_squared() const;

 private:
  void apply_h(std::uint32_t target);
  void apply_x_like(std::uint64_t control_mask, std::uint32_t target);
  void apply_mcz(std::uint64_t mask);

  std::uint32_t qubit_count_;
  std::vector<Amplitude> amps_;
};

/// The ancilla start state for a layout: aux = 1, every s qubit = 1, all x,
/// r, z at 0. Throws MemoryCapError (naming the required byte count) when
/// the layout does not fit the cap.
StateVector init_state(const QubitLayout& layout,
                       std::uint32_t memory_cap_qubits = kDefaultMemoryCapQubits);

/// H on aux and on each x qubit: aux to |->, x register uniform.
void apply_hadamard_layer(StateVector& sv, const QubitLayout& layout);

/// Probability of each n-bit x value, ancillas traced out. Entry w holds the
/// probability of the assignment whose bit word is w.
std::vector<double> x_register_marginal(const StateVector& sv,
                                        const QubitLayout& layout);

/// Total probability of the x values satisfying the predicate.
double marked_probability(const std::vector<double>& x_marginal,
                          const std::function<bool(std::uint64_t)>& predicate);
double marked_probability(const StateVector& sv, const QubitLayout& layout,
                          const std::function<bool(std::uint64_t)>& predicate);

}  // namespace qmaxcut
