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

#include "qmaxcut/layout.hpp"

#include <string>

namespace qmaxcut {

const char* to_string(LayoutMode mode) {
  return mode == LayoutMode::Faithful ? "faithful" : "compact";
}

std::uint64_t QubitLayout::faithful_total_qubits(std::uint64_t n,
                                                 std::uint64_t m) {
  return n + 1 + 3 * m * (m + 1) + m * (m + 3) / 2;
}

std::uint64_t QubitLayout::compact_total_qubits(std::uint64_t n,
                                                std::uint64_t m) {
  return n + 7 + m * (m + 3) / 2;
}

QubitLayout::QubitLayout(LayoutMode mode, std::uint32_t n, std::uint32_t m)
    : mode_(mode), n_(n), m_(m) {
  if (n < 1) throw CircuitError("layout needs n >= 1");
  if (m < 1) throw CircuitError("layout needs m >= 1 (edgeless graphs bypass synthesis)");

  const std::uint64_t apps = static_cast<std::uint64_t>(m) * (m + 1) / 2;
  const std::uint64_t total = mode == LayoutMode::Faithful
                                  ? faithful_total_qubits(n, m)
                                  : compact_total_qubits(n, m);
  if (apps > 0xffffffffull || total > 0xffffffffull) {
    throw CircuitError("layout too large to index");
  }
  applications_ = static_cast<std::uint32_t>(apps);
  r_base_ = n_ + 1;
  if (mode == LayoutMode::Faithful) {
    s_base_ = r_base_ + 4 * applications_;
    z_base_ = s_base_ + 2 * applications_;
  } else {
    s_base_ = r_base_ + 4;
    z_base_ = s_base_ + 2;
  }
  total_ = static_cast<std::uint32_t>(total);
}

QubitLayout QubitLayout::faithful(std::uint32_t n, std::uint32_t m) {
  return QubitLayout(LayoutMode::Faithful, n, m);
}

QubitLayout QubitLayout::compact(std::uint32_t n, std::uint32_t m) {
  return QubitLayout(LayoutMode::Compact, n, m);
}

QubitLayout QubitLayout::make(LayoutMode mode, std::uint32_t n,
                              std::uint32_t m) {
  return QubitLayout(mode, n, m);
}

std::uint32_t QubitLayout::x(std::uint32_t d) const {
  if (d < 1 || d > n_) {
    throw CircuitError("x index " + std::to_string(d) + " outside [1, " +
                       std::to_string(n_) + "]");
  }
  return d - 1;
}

std::uint32_t QubitLayout::r(std::uint32_t app, std::uint32_t s) const {
  if (app < 1 || app > applications_) {
    throw CircuitError("predicate application " + std::to_string(app) +
                       " outside [1, " + std::to_string(applications_) + "]");
  }
  if (s < 1 || s > 4) {
    throw CircuitError("r slot " + std::to_string(s) + " outside [1, 4]");
  }
  const std::uint32_t block = mode_ == LayoutMode::Faithful ? app - 1 : 0;
  return r_base_ + 4 * block + (s - 1);
}

std::uint32_t QubitLayout::s(std::uint32_t app, std::uint32_t b) const {
  if (app < 1 || app > applications_) {
    throw CircuitError("predicate application " + std::to_string(app) +
                       " outside [1, " + std::to_string(applications_) + "]");
  }
  if (b < 1 || b > 2) {
    throw CircuitError("s slot " + std::to_string(b) + " outside [1, 2]");
  }
  const std::uint32_t block = mode_ == LayoutMode::Faithful ? app - 1 : 0;
  return s_base_ + 2 * block + (b - 1);
}

std::uint32_t QubitLayout::z(std::uint32_t i, std::uint32_t j) const {
  if (i < 1 || i > m_) {
    throw CircuitError("z row " + std::to_string(i) + " outside [1, " +
                       std::to_string(m_) + "]");
  }
  if (j > i) {
    throw CircuitError("z level " + std::to_string(j) + " outside [0, " +
                       std::to_string(i) + "]");
  }
  // Row i starts after rows 1..i-1, which hold 2 + 3 + ... + i qubits.
  const std::uint32_t row_offset = (i - 1) * (i + 2) / 2;
  return z_base_ + row_offset + j;
}

std::vector<std::uint32_t> QubitLayout::s_qubits() const {
  const std::uint32_t pairs =
      mode_ == LayoutMode::Faithful ? applications_ : 1;
  std::vector<std::uint32_t> out;
  out.reserve(2 * pairs);
  for (std::uint32_t j = 0; j < 2 * pairs; ++j) {
    out.push_back(s_base_ + j);
  }
  return out;
}

std::uint64_t QubitLayout::initial_basis_index() const {
  if (total_ > 64) {
    throw CircuitError("layout exceeds 64 qubits; no basis index available");
  }
  std::uint64_t index = 1ull << aux();
  for (std::uint32_t q : s_qubits()) {
    index |= 1ull << q;
  }
  return index;
}

}  // namespace qmaxcut
