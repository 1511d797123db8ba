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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qmaxcut/errors.hpp"

namespace qmaxcut {

/// Every admitted gate is an involution, so circuit inversion is gate-list
/// reversal. No parameterized gates.
enum class GateKind : std::uint8_t { H, X, Cnot, Toffoli, Mcx, Mcz };

inline constexpr std::size_t kGateKindCount = 6;

const char* to_string(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<std::uint32_t> controls;  // empty for H and X
  std::uint32_t target;

  static Gate h(std::uint32_t target) { return {GateKind::H, {}, target}; }
  static Gate x(std::uint32_t target) { return {GateKind::X, {}, target}; }
  static Gate cnot(std::uint32_t control, std::uint32_t target) {
    return {GateKind::Cnot, {control}, target};
  }
  static Gate toffoli(std::uint32_t c1, std::uint32_t c2,
                      std::uint32_t target) {
    return {GateKind::Toffoli, {c1, c2}, target};
  }
  static Gate mcx(std::vector<std::uint32_t> controls, std::uint32_t target) {
    return {GateKind::Mcx, std::move(controls), target};
  }
  // An MCZ with no controls is a plain Z; needed by the n=1 diffusion.
  static Gate mcz(std::vector<std::uint32_t> controls, std::uint32_t target) {
    return {GateKind::Mcz, std::move(controls), target};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed qubit count. Appends validate index range,
/// control/target collisions, and per-kind control arity.
class Circuit {
 public:
  explicit Circuit(std::uint32_t qubit_count);

  std::uint32_t qubit_count() const { return qubit_count_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  void append(Gate gate);
  /// Appends every gate of `other` (same qubit count required).
  void extend(const Circuit& other);

  /// Reversed gate list. All kinds are self-inverse, so this is the exact
  /// circuit inverse.
  Circuit inverse() const;

  /// One gate per line: "KIND ctrl,... -> target".
  std::string netlist() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::uint32_t qubit_count_;
  std::vector<Gate> gates_;
};

struct ResourceStats {
  std::array<std::size_t, kGateKindCount> by_kind{};
  std::size_t total_gates = 0;
  std::uint32_t qubit_count = 0;

  std::size_t count(GateKind kind) const {
    return by_kind[static_cast<std::size_t>(kind)];
  }
};

ResourceStats resource_stats(const Circuit& c);

}  // namespace qmaxcut
