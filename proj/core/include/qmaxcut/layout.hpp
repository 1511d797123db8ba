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

#include <cstdint>
#include <vector>

#include "qmaxcut/errors.hpp"

namespace qmaxcut {

/// Faithful: a fresh 4-qubit r block and 2-qubit s pair per predicate
/// application, j in [1, m(m+1)/2]. Compact: one shared r block and s pair,
/// uncomputed after each application. The z triangle is identical in both.
enum class LayoutMode : std::uint8_t { Faithful, Compact };

const char* to_string(LayoutMode mode);

/// Register map over qubit indices [0, total_qubits). Assignment order is
/// fixed: x, then aux, then r, then s, then z. Index 0 holds x_1, so the
/// x register occupies the low n bits of an amplitude index.
class QubitLayout {
 public:
  static QubitLayout faithful(std::uint32_t n, std::uint32_t m);
  static QubitLayout compact(std::uint32_t n, std::uint32_t m);
  static QubitLayout make(LayoutMode mode, std::uint32_t n, std::uint32_t m);

  LayoutMode mode() const { return mode_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t total_qubits() const { return total_; }

  /// Predicate applications per counting block: m(m+1)/2 (one for the first
  /// edge, i+1 for the levels of edge i+1).
  std::uint32_t predicate_applications() const { return applications_; }

  std::uint32_t x(std::uint32_t d) const;  // d in [1, n]
  std::uint32_t aux() const { return n_; }
  /// r_{app, s}: app in [1, predicate_applications()], s in [1, 4]. Compact
  /// mode maps every app onto the shared block.
  std::uint32_t r(std::uint32_t app, std::uint32_t s) const;
  /// s_{app, b}: b in [1, 2].
  std::uint32_t s(std::uint32_t app, std::uint32_t b) const;
  /// z_{i, j}: i in [1, m], j in [0, i].
  std::uint32_t z(std::uint32_t i, std::uint32_t j) const;

  /// All s-pair qubits (the ones initialized to |1>).
  std::vector<std::uint32_t> s_qubits() const;

  /// Basis index of the ancilla start state: aux = 1, every s qubit = 1,
  /// x, r, z all 0.
  std::uint64_t initial_basis_index() const;

  /// Mask over the x register (the low n bits).
  std::uint64_t x_mask() const { return (1ull << n_) - 1; }

  /// Closed forms for the total qubit count, valid for any n, m >= 1.
  static std::uint64_t faithful_total_qubits(std::uint64_t n, std::uint64_t m);
  static std::uint64_t compact_total_qubits(std::uint64_t n, std::uint64_t m);

 private:
  QubitLayout(LayoutMode mode, std::uint32_t n, std::uint32_t m);

  LayoutMode mode_;
  std::uint32_t n_;
  std::uint32_t m_;
  std::uint32_t applications_;
  std::uint32_t r_base_;
  std::uint32_t s_base_;
  std::uint32_t z_base_;
  std::uint32_t total_;
};

}  // namespace qmaxcut
