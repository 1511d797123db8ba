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

#include "qmaxcut/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qmaxcut {

namespace {

// 2^34 amplitudes = 256 GiB; anything past this breaks no matter the cap.
constexpr std::uint32_t kHardQubitCeiling = 34;

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

std::uint64_t control_mask(const Gate& gate) {
  std::uint64_t mask = 0;
  for (std::uint32_t c : gate.controls) {
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

}  // namespace

StateVector::StateVector(std::uint32_t qubit_count)
    : qubit_count_(qubit_count) {
  if (qubit_count == 0 || qubit_count > kHardQubitCeiling) {
    throw CircuitError("dense statevector supports 1 to " +
                       std::to_string(kHardQubitCeiling) + " qubits");
  }
  amps_.assign(std::size_t{1} << qubit_count, Amplitude{0.0, 0.0});
  amps_[0] = Amplitude{1.0, 0.0};
}

void StateVector::set_basis(std::uint64_t index) {
  if (index >= dimension()) {
    throw CircuitError("basis index out of range");
  }
  std::fill(amps_.begin(), amps_.end(), Amplitude{0.0, 0.0});
  amps_[index] = Amplitude{1.0, 0.0};
}

void StateVector::apply_h(std::uint32_t target) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  const std::uint64_t low_mask = bit - 1;
  const std::uint64_t half = dimension() >> 1;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = ((k & ~low_mask) << 1) | (k & low_mask);
    const std::uint64_t i1 = i0 | bit;
    const Amplitude a = amps_[i0];
    const Amplitude b = amps_[i1];
    amps_[i0] = (a + b) * kInvSqrt2;
    amps_[i1] = (a - b) * kInvSqrt2;
  }
}

void StateVector::apply_x_like(std::uint64_t controls, std::uint32_t target) {
  const std::uint64_t bit = std::uint64_t{1} << target;
  const std::uint64_t low_mask = bit - 1;
  const std::uint64_t half = dimension() >> 1;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = ((k & ~low_mask) << 1) | (k & low_mask);
    if ((i0 & controls) == controls) {
      std::swap(amps_[i0], amps_[i0 | bit]);
    }
  }
}

void StateVector::apply_mcz(std::uint64_t mask) {
  const std::uint64_t dim = dimension();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & mask) == mask) {
      amps_[i] = -amps_[i];
    }
  }
}

void StateVector::apply(const Gate& gate) {
  if (gate.target >= qubit_count_) {
    throw CircuitError("gate target out of range for this state");
  }
  for (std::uint32_t c : gate.controls) {
    if (c >= qubit_count_) {
      throw CircuitError("gate control out of range for this state");
    }
  }
  switch (gate.kind) {
    case GateKind::H:
      apply_h(gate.target);
      break;
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Mcx:
      apply_x_like(control_mask(gate), gate.target);
      break;
    case GateKind::Mcz:
      apply_mcz(control_mask(gate) | (std::uint64_t{1} << gate.target));
      break;
  }
}

void StateVector::apply(const Circuit& circuit) {
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

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) {
    total += std::norm(a);
  }
  return total;
}

StateVector init_state(const QubitLayout& layout,
                       std::uint32_t memory_cap_qubits) {
  const std::uint32_t q = layout.total_qubits();
  if (q > memory_cap_qubits || q > kHardQubitCeiling) {
    const double gib =
        static_cast<double>(sizeof(Amplitude)) * std::pow(2.0, q) /
        (1024.0 * 1024.0 * 1024.0);
    throw MemoryCapError(
        q, memory_cap_qubits,
        "dense simulation of " + std::to_string(q) + " qubits needs " +
            std::to_string(gib) + " GiB of amplitudes; raise the memory cap " +
            "to at least " + std::to_string(q) + " qubits (current cap " +
            std::to_string(memory_cap_qubits) + ")");
  }
  StateVector sv(q);
  sv.set_basis(layout.initial_basis_index());
  return sv;
}

void apply_hadamard_layer(StateVector& sv, const QubitLayout& layout) {
  sv.apply(Gate::h(layout.aux()));
  for (std::uint32_t d = 1; d <= layout.n(); ++d) {
    sv.apply(Gate::h(layout.x(d)));
  }
}

std::vector<double> x_register_marginal(const StateVector& sv,
                                        const QubitLayout& layout) {
  const std::uint64_t x_mask = layout.x_mask();
  std::vector<double> marginal(x_mask + 1, 0.0);
  const auto amps = sv.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    marginal[i & x_mask] += std::norm(amps[i]);
  }
  return marginal;
}

double marked_probability(const std::vector<double>& x_marginal,
                          const std::function<bool(std::uint64_t)>& predicate) {
  double total = 0.0;
  for (std::uint64_t x = 0; x < x_marginal.size(); ++x) {
    if (predicate(x)) total += x_marginal[x];
  }
  return total;
}

double marked_probability(const StateVector& sv, const QubitLayout& layout,
                          const std::function<bool(std::uint64_t)>& predicate) {
  return marked_probability(x_register_marginal(sv, layout), predicate);
}

}  // namespace qmaxcut
