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

#include "qmaxcut/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmaxcut/sparse_statevector.hpp"

namespace qmaxcut {

namespace {

void check_edge(const QubitLayout& layout, const Edge& edge) {
  if (edge.k < 1 || edge.k > layout.n() || edge.p < 1 ||
      edge.p > layout.n() || edge.k == edge.p) {
    throw CircuitError("edge (" + std::to_string(edge.k) + ", " +
                       std::to_string(edge.p) +
                       ") invalid for a layout with n = " +
                       std::to_string(layout.n()));
  }
}

void check_layout_matches(const Graph& g, const QubitLayout& layout) {
  if (layout.n() != g.n() || layout.m() != g.m()) {
    throw CircuitError("layout built for (n=" + std::to_string(layout.n()) +
                       ", m=" + std::to_string(layout.m()) +
                       ") does not match graph (n=" + std::to_string(g.n()) +
                       ", m=" + std::to_string(g.m()) + ")");
  }
}

/// AND of two x qubits into a fresh r qubit, with X conjugation selecting
/// which side is negated. negate_k/negate_p pick the literal.
void emit_conjunction(Circuit& c, const QubitLayout& layout, const Edge& edge,
                      bool negate_k, bool negate_p, std::uint32_t r_qubit) {
  const std::uint32_t xk = layout.x(edge.k);
  const std::uint32_t xp = layout.x(edge.p);
  if (negate_k) c.append(Gate::x(xk));
  if (negate_p) c.append(Gate::x(xp));
  c.append(Gate::toffoli(xk, xp, r_qubit));
  if (negate_k) c.append(Gate::x(xk));
  if (negate_p) c.append(Gate::x(xp));
}

/// OR of two r qubits into an s qubit that starts at |1>:
/// s = 1 XOR (NOT r_a AND NOT r_b) = r_a OR r_b.
void emit_or_into_preset(Circuit& c, std::uint32_t r_a, std::uint32_t r_b,
                         std::uint32_t s_qubit) {
  c.append(Gate::x(r_a));
  c.append(Gate::x(r_b));
  c.append(Gate::toffoli(r_a, r_b, s_qubit));
  c.append(Gate::x(r_a));
  c.append(Gate::x(r_b));
}

/// EIIAC followed by EINIAC for one edge, sharing the application slot.
Circuit predicate_pair(const QubitLayout& layout, const Edge& edge,
                       std::uint32_t app) {
  Circuit c = synth_eiiac(layout, edge, app);
  c.extend(synth_einiac(layout, edge, app));
  return c;
}

}  // namespace

Circuit synth_eiiac(const QubitLayout& layout, const Edge& edge,
                    std::uint32_t app) {
  check_edge(layout, edge);
  Circuit c(layout.total_qubits());
  emit_conjunction(c, layout, edge, false, true, layout.r(app, 1));
  emit_conjunction(c, layout, edge, true, false, layout.r(app, 2));
  emit_or_into_preset(c, layout.r(app, 1), layout.r(app, 2),
                      layout.s(app, 1));
  return c;
}

Circuit synth_einiac(const QubitLayout& layout, const Edge& edge,
                     std::uint32_t app) {
  check_edge(layout, edge);
  Circuit c(layout.total_qubits());
  emit_conjunction(c, layout, edge, true, true, layout.r(app, 3));
  emit_conjunction(c, layout, edge, false, false, layout.r(app, 4));
  emit_or_into_preset(c, layout.r(app, 3), layout.r(app, 4),
                      layout.s(app, 2));
  return c;
}

Circuit synth_cfe(const QubitLayout& layout, const Edge& first_edge) {
  const std::uint32_t app = 1;
  Circuit pred = predicate_pair(layout, first_edge, app);
  Circuit c = pred;
  c.append(Gate::cnot(layout.s(app, 1), layout.z(1, 1)));
  c.append(Gate::cnot(layout.s(app, 2), layout.z(1, 0)));
  if (layout.mode() == LayoutMode::Compact) {
    c.extend(pred.inverse());
  }
  return c;
}

Circuit synth_cse(const QubitLayout& layout, const Edge& edge,
                  std::uint32_t row, std::uint32_t level, std::uint32_t app) {
  if (row < 1 || row + 1 > layout.m()) {
    throw CircuitError("CSE row " + std::to_string(row) + " outside [1, " +
                       std::to_string(layout.m() - 1) + "]");
  }
  if (level > row) {
    throw CircuitError("CSE level " + std::to_string(level) +
                       " outside [0, " + std::to_string(row) + "]");
  }
  Circuit pred = predicate_pair(layout, edge, app);
  Circuit c = pred;
  c.append(Gate::toffoli(layout.s(app, 1), layout.z(row, level),
                         layout.z(row + 1, level + 1)));
  c.append(Gate::toffoli(layout.s(app, 2), layout.z(row, level),
                         layout.z(row + 1, level)));
  if (layout.mode() == LayoutMode::Compact) {
    c.extend(pred.inverse());
  }
  return c;
}

Circuit synth_counting_block(const Graph& g, const QubitLayout& layout) {
  check_layout_matches(g, layout);
  if (g.m() == 0) {
    throw CircuitError("counting block needs at least one edge");
  }
  Circuit c = synth_cfe(layout, g.edges()[0]);
  std::uint32_t app = 1;
  for (std::uint32_t row = 1; row + 1 <= g.m(); ++row) {
    const Edge& edge = g.edges()[row];  // edge row+1, 1-indexed
    for (std::uint32_t level = row + 1; level-- > 0;) {
      c.extend(synth_cse(layout, edge, row, level, ++app));
    }
  }
  return c;
}

Circuit synth_oracle(const QubitLayout& layout, std::size_t t) {
  if (t > layout.m()) {
    throw CircuitError("oracle threshold " + std::to_string(t) +
                       " exceeds edge count " + std::to_string(layout.m()));
  }
  Circuit c(layout.total_qubits());
  c.append(Gate::cnot(layout.z(layout.m(), static_cast<std::uint32_t>(t)),
                      layout.aux()));
  return c;
}

Circuit synth_diffusion(const QubitLayout& layout) {
  Circuit c(layout.total_qubits());
  for (std::uint32_t d = 1; d <= layout.n(); ++d) {
    c.append(Gate::h(layout.x(d)));
  }
  for (std::uint32_t d = 1; d <= layout.n(); ++d) {
    c.append(Gate::x(layout.x(d)));
  }
  std::vector<std::uint32_t> controls;
  for (std::uint32_t d = 1; d + 1 <= layout.n(); ++d) {
    controls.push_back(layout.x(d));
  }
  c.append(Gate::mcz(std::move(controls), layout.x(layout.n())));
  for (std::uint32_t d = 1; d <= layout.n(); ++d) {
    c.append(Gate::x(layout.x(d)));
  }
  for (std::uint32_t d = 1; d <= layout.n(); ++d) {
    c.append(Gate::h(layout.x(d)));
  }
  return c;
}

Circuit synth_grover_iteration(const Graph& g, const QubitLayout& layout,
                               std::size_t t) {
  Circuit counting = synth_counting_block(g, layout);
  Circuit c = counting;
  c.extend(synth_oracle(layout, t));
  c.extend(counting.inverse());
  c.extend(synth_diffusion(layout));
  return c;
}

std::uint64_t grover_iteration_count(std::uint32_t n, std::uint64_t r) {
  if (r == 0) {
    throw std::invalid_argument("iteration count undefined for r = 0");
  }
  if (n > 63) {
    throw std::invalid_argument("register too wide");
  }
  const double ratio =
      static_cast<double>(std::uint64_t{1} << n) / static_cast<double>(r);
  return static_cast<std::uint64_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
}

std::vector<CountingCheckFailure> verify_counting_block(
    const Graph& g, const QubitLayout& layout, const Circuit& block) {
  check_layout_matches(g, layout);
  std::vector<CountingCheckFailure> failures;
  const std::uint64_t x_count = std::uint64_t{1} << g.n();

  for (std::uint64_t x = 0; x < x_count; ++x) {
    SparseStateVector sv(layout.total_qubits(),
                         layout.initial_basis_index() | x);
    sv.apply(block);

    if (sv.support_size() != 1) {
      failures.push_back(
          {x, "block is not classical on basis inputs (support " +
                  std::to_string(sv.support_size()) + ")"});
      continue;
    }
    const auto& [index, amp] = *sv.support().begin();
    if (std::abs(amp - std::complex<double>{1.0, 0.0}) > 1e-9) {
      failures.push_back({x, "basis amplitude drifted from 1"});
      continue;
    }
    if ((index & layout.x_mask()) != x) {
      failures.push_back({x, "x register was modified"});
      continue;
    }

    std::ostringstream detail;
    bool ok = true;
    std::size_t prefix_cut = 0;
    for (std::uint32_t i = 1; i <= g.m(); ++i) {
      const Edge& e = g.edges()[i - 1];
      prefix_cut += static_cast<std::size_t>(
          edge_in_cut(static_cast<int>((x >> (e.k - 1)) & 1),
                      static_cast<int>((x >> (e.p - 1)) & 1)));
      for (std::uint32_t j = 0; j <= i; ++j) {
        const int bit =
            static_cast<int>((index >> layout.z(i, j)) & 1);
        const int expected = (j == prefix_cut) ? 1 : 0;
        if (bit != expected) {
          if (!ok) detail << "; ";
          detail << "z_{" << i << ',' << j << "} = " << bit << ", expected "
                 << expected;
          ok = false;
        }
      }
    }
    if (!ok) {
      failures.push_back({x, detail.str()});
    }
  }
  return failures;
}

}  // namespace qmaxcut
