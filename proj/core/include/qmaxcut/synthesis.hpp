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
#include <string>
#include <vector>

#include "qmaxcut/circuit.hpp"
#include "qmaxcut/graph.hpp"
#include "qmaxcut/layout.hpp"

namespace qmaxcut {

// Circuit builders for the Grover max-cut pipeline. All circuits span the
// full layout width; each builder returns its gates only, so callers compose
// blocks with Circuit::extend and invert them with Circuit::inverse.

/// Edge-in-cut predicate. With r_{app,1}, r_{app,2} at |0> and s_{app,1} at
/// |1>, computes r1 = x_k AND NOT x_p, r2 = NOT x_k AND x_p, and
/// s1 = r1 OR r2 (a Toffoli between X conjugations, exploiting the |1>
/// start of s1).
Circuit synth_eiiac(const QubitLayout& layout, const Edge& edge,
                    std::uint32_t app);

/// Edge-not-in-cut predicate: r3 = NOT x_k AND NOT x_p, r4 = x_k AND x_p,
/// s2 = r3 OR r4. Complement of synth_eiiac on every basis input.
Circuit synth_einiac(const QubitLayout& layout, const Edge& edge,
                     std::uint32_t app);

/// First-edge counter seed: both predicates for the first edge, then
/// CNOT(s1 -> z_{1,1}) and CNOT(s2 -> z_{1,0}). Compact mode uncomputes the
/// predicates immediately so the shared ancillas are clean again.
Circuit synth_cfe(const QubitLayout& layout, const Edge& first_edge);

/// Counter update for edge row+1 at level j: both predicates, then
/// Toffoli(s1, z_{row,level} -> z_{row+1,level+1}) and
/// Toffoli(s2, z_{row,level} -> z_{row+1,level}). Compact mode uncomputes
/// the predicates after the two Toffolis. row ranges over [1, m-1].
Circuit synth_cse(const QubitLayout& layout, const Edge& edge,
                  std::uint32_t row, std::uint32_t level, std::uint32_t app);

/// Full counting cascade: CFE on the first edge, then for each further edge
/// i+1 one CSE per level j = i down to 0. After it, on any basis input x,
/// row z_{i,.} is one-hot at the cut size of the first i edges.
Circuit synth_counting_block(const Graph& g, const QubitLayout& layout);

/// Phase-kickback marker: one CNOT from z_{m,t} onto aux. With aux in |->,
/// flips the sign of exactly the basis states whose cut size is t.
Circuit synth_oracle(const QubitLayout& layout, std::size_t t);

/// Reflection about the uniform state of the x register:
/// H^n, X^n, MCZ over all x qubits, X^n, H^n.
Circuit synth_diffusion(const QubitLayout& layout);

/// One Grover iteration: counting block, oracle, inverse counting block,
/// diffusion.
Circuit synth_grover_iteration(const Graph& g, const QubitLayout& layout,
                               std::size_t t);

/// floor((pi/4) * sqrt(2^n / r)); r >= 1.
std::uint64_t grover_iteration_count(std::uint32_t n, std::uint64_t r);

/// One failed basis state of a counting-block sweep.
struct CountingCheckFailure {
  std::uint64_t x = 0;
  std::string detail;
};

/// Runs `block` on every basis input of the x register and checks that every
/// z row is one-hot at the cut size of its edge prefix (the classical
/// formula is the reference). Returns the failing basis states; empty means
/// the block computes the cut sizes everywhere.
std::vector<CountingCheckFailure> verify_counting_block(
    const Graph& g, const QubitLayout& layout, const Circuit& block);

}  // namespace qmaxcut
