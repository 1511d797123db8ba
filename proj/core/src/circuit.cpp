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

#include "qmaxcut/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace qmaxcut {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::Cnot:
      return "CNOT";
    case GateKind::Toffoli:
      return "TOFFOLI";
    case GateKind::Mcx:
      return "MCX";
    case GateKind::Mcz:
      return "MCZ";
  }
  return "?";
}

Circuit::Circuit(std::uint32_t qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count == 0) {
    throw CircuitError("circuit needs at least one qubit");
  }
}

namespace {

void validate_arity(const Gate& g) {
  const std::size_t c = g.controls.size();
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
      if (c != 0) throw CircuitError("H/X take no controls");
      break;
    case GateKind::Cnot:
      if (c != 1) throw CircuitError("CNOT takes exactly one control");
      break;
    case GateKind::Toffoli:
      if (c != 2) throw CircuitError("Toffoli takes exactly two controls");
      break;
    case GateKind::Mcx:
      if (c < 1) throw CircuitError("MCX takes at least one control");
      break;
    case GateKind::Mcz:
      break;  // zero controls is a plain Z
  }
}

}  // namespace

void Circuit::append(Gate gate) {
  validate_arity(gate);
  if (gate.target >= qubit_count_) {
    throw CircuitError("target qubit " + std::to_string(gate.target) +
                       " out of range for " + std::to_string(qubit_count_) +
                       " qubits");
  }
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t c : gate.controls) {
    if (c >= qubit_count_) {
      throw CircuitError("control qubit " + std::to_string(c) +
                         " out of range for " + std::to_string(qubit_count_) +
                         " qubits");
    }
    if (c == gate.target) {
      throw CircuitError("control collides with target qubit " +
                         std::to_string(c));
    }
    if (!seen.insert(c).second) {
      throw CircuitError("repeated control qubit " + std::to_string(c));
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::extend(const Circuit& other) {
  if (other.qubit_count_ != qubit_count_) {
    throw CircuitError("cannot extend a circuit with a different qubit count");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::inverse() const {
  Circuit out(qubit_count_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

std::string Circuit::netlist() const {
  std::ostringstream os;
  for (const Gate& g : gates_) {
    os << to_string(g.kind) << ' ';
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) os << ',';
      os << g.controls[i];
    }
    if (!g.controls.empty()) os << ' ';
    os << "-> " << g.target << '\n';
  }
  return os.str();
}

ResourceStats resource_stats(const Circuit& c) {
  ResourceStats stats;
  stats.qubit_count = c.qubit_count();
  stats.total_gates = c.size();
  for (const Gate& g : c.gates()) {
    ++stats.by_kind[static_cast<std::size_t>(g.kind)];
  }
  return stats;
}

}  // namespace qmaxcut
