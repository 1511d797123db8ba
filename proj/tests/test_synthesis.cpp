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

#include <doctest.h>

#include <cmath>

#include "qmaxcut/graph.hpp"
#include "qmaxcut/sparse_statevector.hpp"
#include "qmaxcut/statevector.hpp"
#include "qmaxcut/synthesis.hpp"
#include "test_util.hpp"

using namespace qmaxcut;

namespace {

int bit_at(std::uint64_t index, std::uint32_t qubit) {
  return static_cast<int>((index >> qubit) & 1);
}

// Basis input with chosen x_k, x_p values for a 2-vertex scratch graph.
std::uint64_t predicate_output(const QubitLayout& layout, const Circuit& c,
                               int xk, int xp) {
  const std::uint64_t x = static_cast<std::uint64_t>(xk) |
                          (static_cast<std::uint64_t>(xp) << 1);
  bool classical = false;
  const std::uint64_t out = qtest::run_basis(c, layout, x, &classical);
  REQUIRE(classical);
  return out;
}

}  // namespace

TEST_CASE("EIIAC evaluates the in-cut predicate on all four inputs") {
  const QubitLayout layout = QubitLayout::faithful(2, 1);
  const Circuit c = synth_eiiac(layout, Edge{1, 2}, 1);
  for (int xk = 0; xk <= 1; ++xk) {
    for (int xp = 0; xp <= 1; ++xp) {
      const std::uint64_t out = predicate_output(layout, c, xk, xp);
      CHECK(bit_at(out, layout.s(1, 1)) == edge_in_cut(xk, xp));
      // Intermediate conjunctions land in the r pair.
      CHECK(bit_at(out, layout.r(1, 1)) == (xk & ~xp & 1));
      CHECK(bit_at(out, layout.r(1, 2)) == (~xk & xp & 1));
      // The x register itself is untouched.
      CHECK(bit_at(out, layout.x(1)) == xk);
      CHECK(bit_at(out, layout.x(2)) == xp);
    }
  }
}

TEST_CASE("EINIAC evaluates the complement predicate") {
  const QubitLayout layout = QubitLayout::faithful(2, 1);
  const Circuit in_cut = synth_eiiac(layout, Edge{1, 2}, 1);
  const Circuit not_in_cut = synth_einiac(layout, Edge{1, 2}, 1);
  for (int xk = 0; xk <= 1; ++xk) {
    for (int xp = 0; xp <= 1; ++xp) {
      const std::uint64_t out = predicate_output(layout, not_in_cut, xk, xp);
      CHECK(bit_at(out, layout.s(1, 2)) == edge_not_in_cut(xk, xp));
      CHECK(bit_at(out, layout.r(1, 3)) == (~xk & ~xp & 1));
      CHECK(bit_at(out, layout.r(1, 4)) == (xk & xp & 1));
      // s2 complements s1 on every input.
      const std::uint64_t out1 = predicate_output(layout, in_cut, xk, xp);
      CHECK((bit_at(out, layout.s(1, 2)) ^ bit_at(out1, layout.s(1, 1))) == 1);
    }
  }
}

TEST_CASE("CFE seeds the first z row") {
  const Graph g = qtest::example_graph();
  for (LayoutMode mode : {LayoutMode::Faithful, LayoutMode::Compact}) {
    const QubitLayout layout = QubitLayout::make(mode, g.n(), g.m());
    const Circuit cfe = synth_cfe(layout, g.edges()[0]);

    // x = 010: first edge (1,2) has x1 = 0, x2 = 1, so it is in the cut.
    std::uint64_t out = qtest::run_basis(cfe, layout, 0b010);
    CHECK(bit_at(out, layout.z(1, 1)) == 1);
    CHECK(bit_at(out, layout.z(1, 0)) == 0);

    out = qtest::run_basis(cfe, layout, 0b000);
    CHECK(bit_at(out, layout.z(1, 1)) == 0);
    CHECK(bit_at(out, layout.z(1, 0)) == 1);

    for (std::uint64_t x = 0; x < 8; ++x) {
      out = qtest::run_basis(cfe, layout, x);
      CHECK((bit_at(out, layout.z(1, 0)) + bit_at(out, layout.z(1, 1))) == 1);
    }
  }
}

TEST_CASE("compact CFE leaves the shared predicate ancillas clean") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  const Circuit cfe = synth_cfe(layout, g.edges()[0]);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const std::uint64_t out = qtest::run_basis(cfe, layout, x);
    for (std::uint32_t s = 1; s <= 4; ++s) {
      CHECK(bit_at(out, layout.r(1, s)) == 0);
    }
    CHECK(bit_at(out, layout.s(1, 1)) == 1);
    CHECK(bit_at(out, layout.s(1, 2)) == 1);
  }
}

TEST_CASE("CSE propagates or holds the count") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  Circuit block = synth_cfe(layout, g.edges()[0]);

  SUBCASE("level matching the current count advances it") {
    // x = 010: CFE set z_{1,1}; edge (2,3) has x2 = 1, x3 = 0, in the cut.
    Circuit c = block;
    c.extend(synth_cse(layout, g.edges()[1], 1, 1, 2));
    const std::uint64_t out = qtest::run_basis(c, layout, 0b010);
    CHECK(bit_at(out, layout.z(2, 2)) == 1);
    CHECK(bit_at(out, layout.z(2, 1)) == 0);
    CHECK(bit_at(out, layout.z(2, 0)) == 0);
  }

  SUBCASE("level with a zero control changes nothing") {
    Circuit c = block;
    c.extend(synth_cse(layout, g.edges()[1], 1, 0, 2));  // z_{1,0} = 0 here
    const std::uint64_t out = qtest::run_basis(c, layout, 0b010);
    CHECK(bit_at(out, layout.z(2, 0)) == 0);
    CHECK(bit_at(out, layout.z(2, 1)) == 0);
  }

  SUBCASE("zero-cut input walks the zero lane") {
    Circuit c = block;
    c.extend(synth_cse(layout, g.edges()[1], 1, 1, 2));
    c.extend(synth_cse(layout, g.edges()[1], 1, 0, 3));
    const std::uint64_t out = qtest::run_basis(c, layout, 0b000);
    CHECK(bit_at(out, layout.z(2, 0)) == 1);
    CHECK(bit_at(out, layout.z(2, 1)) == 0);
    CHECK(bit_at(out, layout.z(2, 2)) == 0);
  }

  SUBCASE("row and level bounds are enforced") {
    CHECK_THROWS_AS(synth_cse(layout, g.edges()[1], 2, 0, 2), CircuitError);
    CHECK_THROWS_AS(synth_cse(layout, g.edges()[1], 0, 0, 2), CircuitError);
    CHECK_THROWS_AS(synth_cse(layout, g.edges()[1], 1, 2, 2), CircuitError);
  }
}

TEST_CASE("counting block one-hots every z row at the prefix cut size") {
  const Graph g = qtest::example_graph();
  for (LayoutMode mode : {LayoutMode::Faithful, LayoutMode::Compact}) {
    const QubitLayout layout = QubitLayout::make(mode, g.n(), g.m());
    const Circuit block = synth_counting_block(g, layout);
    CHECK(verify_counting_block(g, layout, block).empty());

    // Spot values for the example graph.
    std::uint64_t out = qtest::run_basis(block, layout, 0b010);
    CHECK(bit_at(out, layout.z(2, 2)) == 1);
    CHECK(bit_at(out, layout.z(2, 1)) == 0);
    CHECK(bit_at(out, layout.z(2, 0)) == 0);

    out = qtest::run_basis(block, layout, 0b001);
    CHECK(bit_at(out, layout.z(2, 1)) == 1);

    out = qtest::run_basis(block, layout, 0b000);
    CHECK(bit_at(out, layout.z(2, 0)) == 1);
  }
}

TEST_CASE("counting block verifies across the small-graph suite") {
  // The acceptance suite runs the full set; here the triangle, the 4-path,
  // and a couple of seeded graphs keep the unit suite quick.
  std::vector<Graph> graphs;
  graphs.push_back(qtest::triangle());
  graphs.push_back(qtest::path4());
  Xoshiro256 rng(43);
  graphs.push_back(qtest::random_graph(rng, 5, 5));
  graphs.push_back(qtest::random_graph(rng, 5, 6));
  for (const Graph& g : graphs) {
    const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
    const Circuit block = synth_counting_block(g, layout);
    CHECK(verify_counting_block(g, layout, block).empty());
  }
}

TEST_CASE("verify_counting_block flags a corrupted block") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  const Circuit block = synth_counting_block(g, layout);

  Circuit corrupted(layout.total_qubits());
  bool dropped = false;
  for (const Gate& gate : block.gates()) {
    if (!dropped && gate.kind == GateKind::Toffoli &&
        gate.target == layout.z(2, 2)) {
      dropped = true;  // drop the increment into z_{2,2}
      continue;
    }
    corrupted.append(gate);
  }
  REQUIRE(dropped);
  const auto failures = verify_counting_block(g, layout, corrupted);
  CHECK(!failures.empty());
}

TEST_CASE("uncompute restores every ancilla on every basis input") {
  const Graph g = qtest::example_graph();
  for (LayoutMode mode : {LayoutMode::Faithful, LayoutMode::Compact}) {
    const QubitLayout layout = QubitLayout::make(mode, g.n(), g.m());
    const Circuit block = synth_counting_block(g, layout);
    Circuit round_trip = block;
    round_trip.extend(block.inverse());
    for (std::uint64_t x = 0; x < 8; ++x) {
      bool classical = false;
      const std::uint64_t out =
          qtest::run_basis(round_trip, layout, x, &classical);
      CHECK(classical);
      CHECK(out == (layout.initial_basis_index() | x));
    }
  }
}

TEST_CASE("oracle flips exactly the size-t states") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  const Circuit block = synth_counting_block(g, layout);

  for (std::size_t t : {std::size_t{0}, std::size_t{2}}) {
    Circuit phase = block;
    phase.extend(synth_oracle(layout, t));
    phase.extend(block.inverse());

    SparseStateVector sv = sparse_init_state(layout);
    apply_hadamard_layer(sv, layout);
    sv.apply(phase);

    // After uncompute the ancillas factor out; each x amplitude should be
    // +-1/sqrt(8) (times the aux |-> which sits in the ancilla bits).
    for (std::uint64_t x = 0; x < 8; ++x) {
      const bool marked = cut_size_bits(g, x) == t;
      // aux = 0 branch of |->: amplitude 1/4 before sign.
      const std::complex<double> amp = sv.amplitude(
          (layout.initial_basis_index() ^ (1ull << layout.aux())) | x);
      const double expected = (marked ? -1.0 : 1.0) / 4.0;
      CHECK(std::abs(amp - std::complex<double>{expected, 0.0}) < 1e-12);
    }
  }

  CHECK_THROWS_AS(synth_oracle(layout, 3), CircuitError);
}

TEST_CASE("diffusion fixes the uniform state") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);
  const StateVector before = sv;
  sv.apply(synth_diffusion(layout));
  // Reflection axis: unchanged up to a global sign.
  double overlap_re = 0.0;
  for (std::uint64_t i = 0; i < sv.dimension(); ++i) {
    overlap_re += (std::conj(before.amplitude(i)) * sv.amplitude(i)).real();
  }
  CHECK(std::abs(std::abs(overlap_re) - 1.0) < 1e-12);
}

TEST_CASE("diffusion applied twice is the identity") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  Circuit twice = synth_diffusion(layout);
  twice.extend(synth_diffusion(layout));
  for (std::uint64_t x = 0; x < 8; ++x) {
    SparseStateVector sv(layout.total_qubits(),
                         layout.initial_basis_index() | x);
    sv.apply(twice);
    CHECK(std::abs(sv.amplitude(layout.initial_basis_index() | x) -
                   std::complex<double>{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("single-vertex diffusion is H X Z X H") {
  const QubitLayout layout = QubitLayout::compact(1, 1);
  const Circuit c = synth_diffusion(layout);
  REQUIRE(c.size() == 5);
  CHECK(c.gates()[0] == Gate::h(0));
  CHECK(c.gates()[1] == Gate::x(0));
  CHECK(c.gates()[2] == Gate::mcz({}, 0));
  CHECK(c.gates()[3] == Gate::x(0));
  CHECK(c.gates()[4] == Gate::h(0));
}

TEST_CASE("iteration count follows the plan formula") {
  CHECK(grover_iteration_count(3, 2) == 1);
  CHECK(grover_iteration_count(3, 8) == 0);
  CHECK(grover_iteration_count(4, 2) == 2);
  CHECK_THROWS_AS(grover_iteration_count(3, 0), std::invalid_argument);

  for (std::uint32_t n = 1; n <= 10; ++n) {
    for (std::uint64_t r = 1; r <= (std::uint64_t{1} << n); ++r) {
      const double expected = std::floor(
          std::numbers::pi / 4.0 *
          std::sqrt(static_cast<double>(std::uint64_t{1} << n) /
                    static_cast<double>(r)));
      CHECK(grover_iteration_count(n, r) ==
            static_cast<std::uint64_t>(expected));
    }
  }
}

TEST_CASE("one Grover iteration nails the example marked pair") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  CHECK(layout.total_qubits() == 15);

  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);
  sv.apply(synth_grover_iteration(g, layout, 2));

  const auto marginal = x_register_marginal(sv, layout);
  CHECK(marginal[0b010] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(marginal[0b101] == doctest::Approx(0.5).epsilon(1e-9));
  const double marked = marked_probability(
      marginal, [&](std::uint64_t x) { return cut_size_bits(g, x) == 2; });
  CHECK(marked == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a full iteration restores the ancillas on every branch") {
  const Graph g = qtest::example_graph();
  const QubitLayout layout = QubitLayout::compact(g.n(), g.m());
  SparseStateVector sv = sparse_init_state(layout);
  apply_hadamard_layer(sv, layout);
  sv.apply(synth_grover_iteration(g, layout, 2));

  const std::uint64_t ancilla_mask =
      ~layout.x_mask() & ~(1ull << layout.aux()) &
      ((1ull << layout.total_qubits()) - 1);
  const std::uint64_t expected =
      layout.initial_basis_index() & ancilla_mask;
  for (const auto& [index, amp] : sv.support()) {
    CHECK((index & ancilla_mask) == expected);
  }
}

TEST_CASE("faithful and compact modes agree on the example marginal") {
  const Graph g = qtest::example_graph();
  const QubitLayout faithful = QubitLayout::faithful(g.n(), g.m());
  const QubitLayout compact = QubitLayout::compact(g.n(), g.m());

  SparseStateVector sf = sparse_init_state(faithful);
  apply_hadamard_layer(sf, faithful);
  sf.apply(synth_grover_iteration(g, faithful, 2));

  SparseStateVector sc = sparse_init_state(compact);
  apply_hadamard_layer(sc, compact);
  sc.apply(synth_grover_iteration(g, compact, 2));

  const auto mf = x_register_marginal(sf, faithful);
  const auto mc = x_register_marginal(sc, compact);
  for (std::uint64_t x = 0; x < 8; ++x) {
    CHECK(mf[x] == doctest::Approx(mc[x]).epsilon(1e-12));
  }
}

TEST_CASE("golden gate counts for the example iteration") {
  const Graph g = qtest::example_graph();
  const ResourceStats compact = resource_stats(
      synth_grover_iteration(g, QubitLayout::compact(g.n(), g.m()), 2));
  CHECK(compact.total_gates == 290);
  CHECK(compact.count(GateKind::H) == 6);
  CHECK(compact.count(GateKind::X) == 198);
  CHECK(compact.count(GateKind::Cnot) == 5);
  CHECK(compact.count(GateKind::Toffoli) == 80);
  CHECK(compact.count(GateKind::Mcx) == 0);
  CHECK(compact.count(GateKind::Mcz) == 1);

  const ResourceStats faithful = resource_stats(
      synth_grover_iteration(g, QubitLayout::faithful(g.n(), g.m()), 2));
  CHECK(faithful.total_gates == 158);
}

TEST_CASE("golden netlist for the first predicate circuit") {
  const QubitLayout layout = QubitLayout::compact(2, 1);
  // x1 = 0, x2 = 1, r block at 3..6, s pair at 7..8.
  CHECK(synth_eiiac(layout, Edge{1, 2}, 1).netlist() ==
        "X -> 1\n"
        "TOFFOLI 0,1 -> 3\n"
        "X -> 1\n"
        "X -> 0\n"
        "TOFFOLI 0,1 -> 4\n"
        "X -> 0\n"
        "X -> 3\n"
        "X -> 4\n"
        "TOFFOLI 3,4 -> 7\n"
        "X -> 3\n"
        "X -> 4\n");
}

TEST_CASE("synthesis rejects mismatched layouts") {
  const Graph g = qtest::example_graph();
  const QubitLayout wrong = QubitLayout::compact(4, 2);
  CHECK_THROWS_AS(synth_counting_block(g, wrong), CircuitError);
  const QubitLayout layout = QubitLayout::compact(3, 2);
  CHECK_THROWS_AS(synth_eiiac(layout, Edge{1, 4}, 1), CircuitError);
}
