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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmaxcut/circuit.hpp"
#include "qmaxcut/graph.hpp"
#include "qmaxcut/layout.hpp"
#include "qmaxcut/sampling.hpp"
#include "qmaxcut/statevector.hpp"

namespace qmaxcut {

/// Source of R, the number of assignments with cut size exactly t. The
/// default enumerates classically; a quantum-counting backend can slot in
/// here without touching the solve loop.
using SolutionCounter =
    std::function<std::uint64_t(const Graph&, std::size_t)>;

struct SolverConfig {
  LayoutMode mode = LayoutMode::Compact;
  /// First threshold tried; defaults to m.
  std::optional<std::size_t> t_start;
  /// Run R = 0 rounds (with the R = 1 iteration bound) instead of skipping.
  bool strict_paper = false;
  std::uint32_t memory_cap_qubits = kDefaultMemoryCapQubits;
  /// 0 = exact mode: acceptance tests the exact marked probability. When
  /// positive, acceptance tests the fraction of shots that verify.
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  std::uint32_t exhaustive_cap = kDefaultExhaustiveCap;
  SolutionCounter counter;
};

/// One row of the descending-threshold loop.
struct TraceEntry {
  std::size_t t = 0;
  std::uint64_t r = 0;
  std::uint64_t iterations = 0;
  double success_probability = 0.0;
  bool accepted = false;
  bool skipped = false;  // R = 0 round bypassed without simulating
};

enum class EngineKind : std::uint8_t { None, Dense, Sparse };

const char* to_string(EngineKind kind);

/// Accept when the success probability reaches 1/2. The slack absorbs
/// double rounding on instances that sit exactly on the threshold
/// (R/2^n = 1/2 gives sin^2(3*pi/4) = 1/2 in real arithmetic).
inline constexpr double kAcceptThreshold = 0.5;
inline constexpr double kThresholdSlack = 1e-9;

struct SolveResult {
  CutReport report;
  std::vector<TraceEntry> trace;
  double success_probability = 0.0;  // at the accepted t
  EngineKind engine = EngineKind::None;
  std::uint32_t total_qubits = 0;
  ResourceStats iteration_stats;       // one Grover iteration
  std::vector<double> final_marginal;  // x marginal at the accepted t
  std::optional<MeasurementHistogram> histogram;  // when shots > 0

  /// {"perT": [{"t", "R", "iterations", "successProbability", "accepted"},
  /// ...], "final": {"maxCutSize", "witness", "verified"}}
  std::string trace_json_string() const;
};

/// The descending-threshold loop: for t from tStart down to 0, obtain R,
/// skip provably empty rounds (unless strict_paper), run the planned number
/// of Grover iterations, and accept once the success probability reaches
/// 1/2. The returned witness is always re-checked classically; a mismatch
/// raises SolveError instead of returning a wrong cut.
SolveResult solve_maxcut(const Graph& g, const SolverConfig& config = {});

}  // namespace qmaxcut
