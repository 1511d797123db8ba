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

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmaxcut/sampling.hpp"
#include "qmaxcut/solver.hpp"
#include "qmaxcut/synthesis.hpp"

namespace qmaxcut::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string graph_path;
  std::string mode = "compact";
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  std::int64_t t_start = -1;  // -1 = default (m)
  bool strict_paper = false;
  std::uint32_t memory_cap = kDefaultMemoryCapQubits;
  std::string output_path;
};

LayoutMode layout_mode(const Options& opt) {
  return opt.mode == "faithful" ? LayoutMode::Faithful : LayoutMode::Compact;
}

Graph load_graph(const Options& opt) {
  std::ifstream in(opt.graph_path);
  if (!in) {
    throw ParseError(ParseErrorKind::MalformedHeader, 0,
                     "cannot open " + opt.graph_path);
  }
  return parse_graph(in);
}

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.k, e.p});
  }
  return ordered_json{{"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

ordered_json stats_json(const ResourceStats& stats) {
  ordered_json counts;
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    counts[to_string(static_cast<GateKind>(k))] = stats.by_kind[k];
  }
  return ordered_json{{"totalGates", stats.total_gates},
                      {"qubitCount", stats.qubit_count},
                      {"gateCounts", counts}};
}

std::string gate_counts_line(const ResourceStats& stats) {
  std::ostringstream os;
  os << stats.total_gates << "  (";
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    if (k) os << ", ";
    os << to_string(static_cast<GateKind>(k)) << "=" << stats.by_kind[k];
  }
  os << ")";
  return os.str();
}

void emit(const Options& opt, const ordered_json& doc, std::ostream& out,
          const std::string& human) {
  if (!opt.output_path.empty()) {
    std::ofstream file(opt.output_path);
    if (!file) {
      throw std::invalid_argument("cannot write " + opt.output_path);
    }
    file << doc.dump(2) << '\n';
  } else {
    out << human;
  }
}

std::string vertex_set(const std::vector<std::uint32_t>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << ", ";
    os << 'v' << vs[i];
  }
  os << '}';
  return os.str();
}

void append_histogram(std::ostream& os, const MeasurementHistogram& hist) {
  std::vector<std::pair<std::string, std::uint64_t>> rows(
      hist.counts.begin(), hist.counts.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::uint64_t top = rows.empty() ? 1 : std::max<std::uint64_t>(rows[0].second, 1);
  os << "histogram (" << hist.shots << " shots, seed " << hist.seed << "):\n";
  for (const auto& [bits, count] : rows) {
    const std::size_t width = static_cast<std::size_t>(
        (static_cast<double>(count) / static_cast<double>(top)) * 40.0);
    os << "  " << bits << " | " << std::string(width, '#') << ' ' << count
       << '\n';
  }
}

int run_solve(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt);

  SolverConfig config;
  config.mode = layout_mode(opt);
  config.shots = opt.shots;
  config.seed = opt.seed;
  config.strict_paper = opt.strict_paper;
  config.memory_cap_qubits = opt.memory_cap;
  if (opt.t_start >= 0) {
    config.t_start = static_cast<std::size_t>(opt.t_start);
  }

  const SolveResult result = solve_maxcut(g, config);
  const CutAssignment& witness = result.report.assignment;

  ordered_json doc;
  doc["command"] = "solve";
  doc["graph"] = graph_json(g);
  doc["mode"] = opt.mode;
  doc["engine"] = to_string(result.engine);
  doc["qubitCount"] = result.total_qubits;
  doc["trace"] = ordered_json::parse(result.trace_json_string());
  doc["result"] = ordered_json{
      {"maxCutSize", result.report.size},
      {"witness", witness.to_string()},
      {"complement", witness.complement().to_string()},
      {"v1", witness.v1()},
      {"v2", witness.v2()},
      {"optimalAssignments", result.report.optimal_count},
      {"successProbability", result.success_probability},
      {"verified", true},
  };
  doc["resources"] = stats_json(result.iteration_stats);
  if (result.histogram) {
    doc["histogram"] = ordered_json::parse(result.histogram->to_json_string());
  }

  std::ostringstream human;
  human << "graph: n=" << g.n() << ", m=" << g.m() << '\n';
  human << "mode: " << opt.mode << "  engine: " << to_string(result.engine)
        << "  qubits: " << result.total_qubits << '\n';
  for (const TraceEntry& entry : result.trace) {
    human << "t=" << entry.t << ": R=" << entry.r;
    if (entry.skipped) {
      human << ", skipped (no cuts of this size)\n";
    } else {
      human << ", iterations=" << entry.iterations << ", P=" << std::fixed
            << std::setprecision(6) << entry.success_probability
            << (entry.accepted ? "  [accepted]" : "  [rejected]") << '\n';
    }
  }
  human << "max cut size: " << result.report.size << '\n';
  human << "witness: " << witness.to_string()
        << "  (complement: " << witness.complement().to_string() << ")\n";
  human << "V1 = " << vertex_set(witness.v1()) << '\n';
  human << "V2 = " << vertex_set(witness.v2()) << '\n';
  human << "optimal assignments: " << result.report.optimal_count << '\n';
  human << "success probability: " << std::fixed << std::setprecision(6)
        << result.success_probability << '\n';
  human << "verified: yes\n";
  if (result.engine != EngineKind::None) {
    human << "gates per Grover iteration: "
          << gate_counts_line(result.iteration_stats) << '\n';
  }
  if (result.histogram) {
    append_histogram(human, *result.histogram);
  }

  emit(opt, doc, out, human.str());
  return kExitOk;
}

int run_count(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt);

  ordered_json counts;
  std::size_t max_cut = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_t(g.m() + 1);
  for (std::size_t t = 0; t <= g.m(); ++t) {
    by_t[t] = count_cuts_of_size(g, t);
    counts[std::to_string(t)] = by_t[t];
    if (by_t[t] > 0) max_cut = t;
    total += by_t[t];
  }

  ordered_json doc;
  doc["command"] = "count";
  doc["graph"] = graph_json(g);
  doc["counts"] = counts;
  doc["maxCutSize"] = max_cut;
  doc["totalAssignments"] = total;

  std::ostringstream human;
  human << " t  assignments\n";
  for (std::size_t t = 0; t <= g.m(); ++t) {
    human << ' ' << t << "  " << by_t[t]
          << (t == max_cut ? "  <- max cut" : "") << '\n';
  }
  human << "total: " << total << '\n';

  emit(opt, doc, out, human.str());
  return kExitOk;
}

int run_stats(const Options& opt, std::ostream& out) {
  const Graph g = load_graph(opt);

  ordered_json doc;
  doc["command"] = "stats";
  doc["graph"] = graph_json(g);

  std::ostringstream human;
  human << "graph: n=" << g.n() << ", m=" << g.m() << '\n';

  if (g.m() == 0) {
    doc["degenerate"] = true;
    human << "no edges: nothing to synthesize\n";
    emit(opt, doc, out, human.str());
    return kExitOk;
  }

  const std::uint64_t faithful_q =
      QubitLayout::faithful_total_qubits(g.n(), g.m());
  const std::uint64_t compact_q =
      QubitLayout::compact_total_qubits(g.n(), g.m());
  doc["faithfulQubits"] = faithful_q;
  doc["compactQubits"] = compact_q;
  human << "qubits: faithful " << faithful_q << ", compact " << compact_q
        << '\n';

  const ResourceStats compact_stats = resource_stats(synth_grover_iteration(
      g, QubitLayout::compact(g.n(), g.m()), g.m()));
  const ResourceStats faithful_stats = resource_stats(synth_grover_iteration(
      g, QubitLayout::faithful(g.n(), g.m()), g.m()));
  doc["gatesPerIteration"] = ordered_json{
      {"compact", stats_json(compact_stats)},
      {"faithful", stats_json(faithful_stats)},
  };
  human << "gates per Grover iteration (compact): "
        << gate_counts_line(compact_stats) << '\n';
  human << "gates per Grover iteration (faithful): "
        << gate_counts_line(faithful_stats) << '\n';

  ordered_json per_t = ordered_json::array();
  if (g.n() <= kDefaultExhaustiveCap) {
    human << " t  R  iterations\n";
    for (std::size_t t = g.m() + 1; t-- > 0;) {
      const std::uint64_t r = count_cuts_of_size(g, t);
      ordered_json row;
      row["t"] = t;
      row["R"] = r;
      if (r > 0) {
        row["iterations"] = grover_iteration_count(g.n(), r);
        human << ' ' << t << "  " << r << "  "
              << grover_iteration_count(g.n(), r) << '\n';
      } else {
        row["iterations"] = nullptr;
        human << ' ' << t << "  " << r << "  -\n";
      }
      per_t.push_back(row);
    }
  } else {
    human << "R table skipped: n exceeds the exhaustive cap\n";
  }
  doc["iterationsPerT"] = per_t;

  emit(opt, doc, out, human.str());
  return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(opt);
  if (g.n() > 5) {
    err << "verify sweeps all 2^n basis states; n = " << g.n()
        << " exceeds the supported 5\n";
    return kExitParse;
  }
  if (g.m() == 0) {
    out << "no edges: nothing to verify\n";
    return kExitOk;
  }
  const QubitLayout layout =
      QubitLayout::make(layout_mode(opt), g.n(), g.m());
  if (layout.total_qubits() > 64) {
    throw MemoryCapError(layout.total_qubits(), 64,
                         "verification needs " +
                             std::to_string(layout.total_qubits()) +
                             " qubits, over the 64-qubit sparse limit");
  }

  if (!opt.output_path.empty()) {
    // JSON requested: reuse the same sweep, emit machine-readable results.
    const Circuit block = synth_counting_block(g, layout);
    const auto failures = verify_counting_block(g, layout, block);
    ordered_json doc;
    doc["command"] = "verify";
    doc["graph"] = graph_json(g);
    doc["mode"] = opt.mode;
    doc["qubitCount"] = layout.total_qubits();
    doc["basisStates"] = std::uint64_t{1} << g.n();
    ordered_json failure_rows = ordered_json::array();
    for (const auto& f : failures) {
      failure_rows.push_back(
          {{"x", CutAssignment(g.n(), f.x).to_string()},
           {"detail", f.detail}});
    }
    doc["failures"] = failure_rows;
    doc["pass"] = failures.empty();
    emit(opt, doc, out, "");
    return failures.empty() ? kExitOk : kExitCountingMismatch;
  }

  return run_verify_block(g, layout, synth_counting_block(g, layout), out);
}

}  // namespace

int run_verify_block(const Graph& g, const QubitLayout& layout,
                     const Circuit& block, std::ostream& out) {
  const auto failures = verify_counting_block(g, layout, block);
  const std::uint64_t basis_count = std::uint64_t{1} << g.n();
  out << "counting block over " << layout.total_qubits() << " qubits ("
      << to_string(layout.mode()) << ")\n";
  if (failures.empty()) {
    out << basis_count << "/" << basis_count << " basis states verified\n";
    out << "PASS\n";
    return kExitOk;
  }
  for (const auto& f : failures) {
    out << "FAIL x=" << CutAssignment(g.n(), f.x).to_string() << ": "
        << f.detail << '\n';
  }
  out << (basis_count - failures.size()) << "/" << basis_count
      << " basis states verified\n";
  out << "FAIL\n";
  return kExitCountingMismatch;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grover max-cut circuit synthesis and simulation"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  for (const char* name : {"solve", "verify", "count", "stats"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) + " a graph given as an edge-list file");
    sub->add_option("graphfile", opt.graph_path, "graph file (\"n m\" header, then edge lines)")
        ->required();
    sub->add_option("--mode", opt.mode, "ancilla layout")
        ->check(CLI::IsMember({"compact", "faithful"}))
        ->capture_default_str();
    sub->add_option("--shots", opt.shots,
                    "sample this many measurements (0 = exact mode)")
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "sampling seed")
        ->capture_default_str();
    sub->add_option("--t-start", opt.t_start,
                    "first cut size tried (default: m)");
    sub->add_flag("--strict-paper", opt.strict_paper,
                  "simulate R = 0 rounds instead of skipping them");
    sub->add_option("--memory-cap", opt.memory_cap,
                    "dense amplitude budget, in qubits")
        ->capture_default_str();
    sub->add_option("--output", opt.output_path,
                    "write JSON here instead of printing a summary");
    sub->callback([&command, name] { command = name; });
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (command == "solve") return run_solve(opt, out);
    if (command == "count") return run_count(opt, out);
    if (command == "stats") return run_stats(opt, out);
    return run_verify(opt, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const MemoryCapError& e) {
    err << "memory cap: " << e.what() << '\n';
    return kExitMemoryCap;
  } catch (const SolveError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const CircuitError& e) {
    err << "internal circuit error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace qmaxcut::cli
