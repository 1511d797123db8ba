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

#include "qmaxcut/sparse_statevector.hpp"

#include <numbers>
#include <string>

namespace qmaxcut {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

std::uint64_t control_mask(const Gate& gate) {
  std::uint64_t mask = 0;
  for (std::uint32_t c : gate.controls) {
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

}  // namespace

SparseStateVector::SparseStateVector(std::uint32_t qubit_count,
                                     std::uint64_t basis_index)
    : qubit_count_(qubit_count) {
  if (qubit_count == 0 || qubit_count > 64) {
    throw CircuitError("sparse statevector supports 1 to 64 qubits");
  }
  if (qubit_count < 64 && (basis_index >> qubit_count)) {
    throw CircuitError("basis index out of range");
  }
  amps_.emplace(basis_index, std::complex<double>{1.0, 0.0});
}

std::complex<double> SparseStateVector::amplitude(std::uint64_t index) const {
  auto it = amps_.find(index);
  return it == amps_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

void SparseStateVector::apply(const Gate& gate) {
  if (gate.target >= qubit_count_) {
    throw CircuitError("gate target out of range for this state");
  }
  for (std::uint32_t c : gate.controls) {
    if (c >= qubit_count_) {
      throw CircuitError("gate control out of range for this state");
    }
  }
  const std::uint64_t controls = control_mask(gate);
  const std::uint64_t bit = std::uint64_t{1} << gate.target;

  switch (gate.kind) {
    case GateKind::H: {
      std::unordered_map<std::uint64_t, std::complex<double>> next;
      next.reserve(amps_.size() * 2);
      for (const auto& [index, amp] : amps_) {
        const std::complex<double> v = amp * kInvSqrt2;
        if (index & bit) {
          next[index & ~bit] += v;
          next[index] -= v;
        } else {
          next[index] += v;
          next[index | bit] += v;
        }
      }
      // Exact cancellations (e.g. recombining a uniform register) would
      // otherwise bloat the support with zero entries.
      for (auto it = next.begin(); it != next.end();) {
        if (it->second == std::complex<double>{0.0, 0.0}) {
          it = next.erase(it);
        } else {
          ++it;
        }
      }
      amps_ = std::move(next);
      break;
    }
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Mcx: {
      std::unordered_map<std::uint64_t, std::complex<double>> next;
      next.reserve(amps_.size());
      for (const auto& [index, amp] : amps_) {
        const std::uint64_t out =
            (index & controls) == controls ? index ^ bit : index;
        next.emplace(out, amp);
      }
      amps_ = std::move(next);
      break;
    }
    case GateKind::Mcz: {
      const std::uint64_t mask = controls | bit;
      for (auto& [index, amp] : amps_) {
        if ((index & mask) == mask) {
          amp = -amp;
        }
      }
      break;
    }
  }
}

void SparseStateVector::apply(const Circuit& circuit) {
  if (circuit.qubit_count() != qubit_count_) {
    throw CircuitError("circuit qubit count " +
                       std::to_string(circuit.qubit_count()) +
                       " does not match state qubit count " +
                       std::to_string(qubit_count_));
  }
  for (const Gate& g : circuit.gates()) {
    apply(g);
  }
}

double SparseStateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [index, amp] : amps_) {
    total += std::norm(amp);
  }
  return total;
}

SparseStateVector sparse_init_state(const QubitLayout& layout) {
  return SparseStateVector(layout.total_qubits(),
                           layout.initial_basis_index());
}

void apply_hadamard_layer(SparseStateVector& sv, const QubitLayout& layout) {
  sv.apply(Gate::h(layout.aux()));
  for (std::uint32_t d = 1; d <= layout.n(); ++d) {
    sv.apply(Gate::h(layout.x(d)));
  }
}

std::vector<double> x_register_marginal(const SparseStateVector& sv,
                                        const QubitLayout& layout) {
  const std::uint64_t x_mask = layout.x_mask();
  std::vector<double> marginal(x_mask + 1, 0.0);
  for (const auto& [index, amp] : sv.support()) {
    marginal[index & x_mask] += std::norm(amp);
  }
  return marginal;
}

double marked_probability(const SparseStateVector& sv,
                          const QubitLayout& layout,
                          const std::function<bool(std::uint64_t)>& predicate) {
  const auto marginal = x_register_marginal(sv, layout);
  double total = 0.0;
  for (std::uint64_t x = 0; x < marginal.size(); ++x) {
    if (predicate(x)) total += marginal[x];
  }
  return total;
}

}  // namespace qmaxcut
