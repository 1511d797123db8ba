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
#include <unordered_map>
#include <vector>

#include "qmaxcut/circuit.hpp"
#include "qmaxcut/layout.hpp"

namespace qmaxcut {

/// Map-backed statevector over up to 64 qubits. Applies the same gate list
/// as the dense engine, gate by gate; only the storage differs. For the
/// circuits synthesized here, H ever touches only the x register and aux, so
/// the support never exceeds 2^(n+1) basis states no matter how many ancilla
/// qubits the layout carries. This is what lets compact-mode layouts beyond
/// the dense memory cap still execute exactly.
class SparseStateVector {
 public:
  SparseStateVector(std::uint32_t qubit_count, std::uint64_t basis_index);

  std::uint32_t qubit_count() const { return qubit_count_; }
  std::size_t support_size() const { return amps_.size(); }
  const std::unordered_map<std::uint64_t, std::complex<double>>& support()
      const {
    return amps_;
  }

  std::complex<double> amplitude(std::uint64_t index) const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

  double norm_squared() const;

 private:
  std::uint32_t qubit_count_;
  std::unordered_map<std::uint64_t, std::complex<double>> amps_;
};

/// ψ0 for the layout (aux and s qubits set), as a single support entry.
SparseStateVector sparse_init_state(const QubitLayout& layout);

void apply_hadamard_layer(SparseStateVector& sv, const QubitLayout& layout);

std::vector<double> x_register_marginal(const SparseStateVector& sv,
                                        const QubitLayout& layout);

double marked_probability(const SparseStateVector& sv,
                          const QubitLayout& layout,
                          const std::function<bool(std::uint64_t)>& predicate);

}  // namespace qmaxcut
