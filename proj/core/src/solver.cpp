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

#include "qmaxcut/solver.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qmaxcut/sparse_statevector.hpp"
#include "qmaxcut/synthesis.hpp"

namespace qmaxcut {

namespace {

// Dense kernels index with 64-bit words but allocate 2^Q amplitudes; past
// this there is no machine to run them on.
constexpr std::uint32_t kDenseCeilingQubits = 34;
constexpr std::uint32_t kSparseCeilingQubits = 64;
// Dense gate kernels sweep all 2^Q amplitudes regardless of occupancy. A
// compact-mode state keeps at most 2^(n+1) basis states live, so past a
// small width the map executor is strictly faster at identical output.
constexpr std::uint32_t kCompactDenseQubits = 16;

template <typename State>
std::vector<double> run_round(State state, const Graph& g,
                              const QubitLayout& layout, std::size_t t,
                              std::uint64_t iterations) {
  apply_hadamard_layer(state, layout);
  if (iterations > 0) {
    const Circuit iteration = synth_grover_iteration(g, layout, t);
    for (std::uint64_t k = 0; k < iterations; ++k) {
      state.apply(iteration);
    }
  }
  return x_register_marginal(state, layout);
}

// Argmax over the marginal. Within the tied maxima (1e-12 relative, which
// absorbs kernel rounding on exactly-flat distributions) the lowest
// verifying bitstring wins; with none verifying, the lowest overall is
// returned so the classical re-check can surface the mis-peak.
std::uint64_t argmax_witness(
    const std::vector<double>& marginal,
    const std::function<bool(std::uint64_t)>& verifies) {
  double best = 0.0;
  for (double p : marginal) best = std::max(best, p);
  const double cutoff = best * (1.0 - 1e-12);
  std::optional<std::uint64_t> fallback;
  for (std::uint64_t x = 0; x < marginal.size(); ++x) {
    if (marginal[x] < cutoff) continue;
    if (verifies(x)) return x;
    if (!fallback) fallback = x;
  }
  return fallback.value_or(0);
}

}  // namespace

const char* to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::None:
      return "none";
    case EngineKind::Dense:
      return "dense";
    case EngineKind::Sparse:
      return "sparse";
  }
  return "?";
}

std::string SolveResult::trace_json_string() const {
  nlohmann::ordered_json doc;
  doc["perT"] = nlohmann::ordered_json::array();
  for (const TraceEntry& entry : trace) {
    nlohmann::ordered_json row;
    row["t"] = entry.t;
    row["R"] = entry.r;
    row["iterations"] = entry.iterations;
    row["successProbability"] = entry.success_probability;
    row["accepted"] = entry.accepted;
    doc["perT"].push_back(row);
  }
  doc["final"]["maxCutSize"] = report.size;
  doc["final"]["witness"] = report.assignment.to_string();
  doc["final"]["verified"] = true;
  return doc.dump();
}

SolveResult solve_maxcut(const Graph& g, const SolverConfig& config) {
  if (g.n() > 63) {
    throw std::invalid_argument("graphs beyond 63 vertices are not solvable "
                                "by exhaustive verification");
  }
  const std::size_t t_start = config.t_start.value_or(g.m());
  if (t_start > g.m()) {
    throw std::invalid_argument("t_start exceeds edge count");
  }

  SolutionCounter counter = config.counter;
  if (!counter) {
    counter = [cap = config.exhaustive_cap](const Graph& graph,
                                            std::size_t t) {
      return count_cuts_of_size(graph, t, cap);
    };
  }

  SolveResult result;

  // Edgeless graphs have nothing to count; every assignment is optimal.
  if (g.m() == 0) {
    result.report =
        CutReport{0, CutAssignment(g.n(), 0), std::uint64_t{1} << g.n()};
    result.success_probability = 1.0;
    return result;
  }

  const QubitLayout layout = QubitLayout::make(config.mode, g.n(), g.m());
  const std::uint32_t q = layout.total_qubits();

  EngineKind engine;
  if (config.mode == LayoutMode::Faithful) {
    // Faithful mode always runs dense; no quiet fallback.
    if (q <= config.memory_cap_qubits && q <= kDenseCeilingQubits) {
      engine = EngineKind::Dense;
    } else {
      throw MemoryCapError(
          q, config.memory_cap_qubits,
          "faithful layout needs " + std::to_string(q) +
              " qubits, over the memory cap of " +
              std::to_string(config.memory_cap_qubits) +
              "; raise the cap to at least " + std::to_string(q));
    }
  } else if (q <= std::min(config.memory_cap_qubits, kCompactDenseQubits)) {
    engine = EngineKind::Dense;
  } else if (q <= kSparseCeilingQubits) {
    engine = EngineKind::Sparse;
  } else {
    throw MemoryCapError(q, config.memory_cap_qubits,
                         "compact layout needs " + std::to_string(q) +
                             " qubits, past the 64-qubit sparse limit");
  }
  result.engine = engine;
  result.total_qubits = q;

  for (std::size_t t = t_start;; --t) {
    const std::uint64_t r = counter(g, t);

    if (r == 0 && !config.strict_paper) {
      result.trace.push_back(TraceEntry{t, 0, 0, 0.0, false, true});
      if (t == 0) break;
      continue;
    }

    // With nothing marked the formula diverges; strict mode runs the R = 1
    // bound and watches the (provably absent) spikes not appear.
    const std::uint64_t iterations =
        grover_iteration_count(g.n(), r == 0 ? 1 : r);

    std::vector<double> marginal =
        engine == EngineKind::Dense
            ? run_round(init_state(layout, config.memory_cap_qubits), g,
                        layout, t, iterations)
            : run_round(sparse_init_state(layout), g, layout, t, iterations);

    const auto is_solution = [&](std::uint64_t x) {
      return cut_size_bits(g, x) == t;
    };
    const double exact_probability = marked_probability(marginal, is_solution);

    std::optional<MeasurementHistogram> histogram;
    double decision_probability = exact_probability;
    if (config.shots > 0) {
      histogram = sample_shots(marginal, g.n(), config.shots, config.seed);
      std::uint64_t verifying = 0;
      for (const auto& [bitstring, count] : histogram->counts) {
        if (cut_size(g, CutAssignment::from_string(bitstring)) == t) {
          verifying += count;
        }
      }
      decision_probability =
          static_cast<double>(verifying) / static_cast<double>(config.shots);
    }

    const bool accepted =
        decision_probability >= kAcceptThreshold - kThresholdSlack;
    result.trace.push_back(
        TraceEntry{t, r, iterations, decision_probability, accepted, false});

    if (accepted) {
      std::uint64_t witness_bits;
      if (config.shots > 0) {
        // Most frequent outcome that classically verifies; ties go to the
        // lowest bitstring by scanning values ascending.
        std::uint64_t best_count = 0;
        witness_bits = 0;
        for (std::uint64_t x = 0; x < marginal.size(); ++x) {
          const auto it =
              histogram->counts.find(CutAssignment(g.n(), x).to_string());
          if (it == histogram->counts.end() || !is_solution(x)) continue;
          if (it->second > best_count) {
            best_count = it->second;
            witness_bits = x;
          }
        }
        if (best_count == 0) {
          throw SolveError("accepted round produced no verifying outcome");
        }
      } else {
        witness_bits = argmax_witness(marginal, is_solution);
      }

      if (cut_size_bits(g, witness_bits) != t) {
        throw SolveError(
            "witness " + CutAssignment(g.n(), witness_bits).to_string() +
            " does not have cut size " + std::to_string(t) +
            "; the synthesized distribution peaked off the solution set");
      }

      result.report = CutReport{t, CutAssignment(g.n(), witness_bits), r};
      result.success_probability = decision_probability;
      result.iteration_stats =
          resource_stats(synth_grover_iteration(g, layout, t));
      result.final_marginal = std::move(marginal);
      result.histogram = std::move(histogram);
      return result;
    }

    if (t == 0) break;
  }

  throw SolveError("no threshold was accepted at any t; the iteration plan "
                   "never reached probability 1/2");
}

}  // namespace qmaxcut
