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
#include <numbers>

#include "qmaxcut/sampling.hpp"
#include "qmaxcut/sparse_statevector.hpp"
#include "qmaxcut/statevector.hpp"
#include "test_util.hpp"

using namespace qmaxcut;

namespace {

// Scatter-style reference semantics, independent of the in-place kernels.
std::vector<Amplitude> reference_apply(const std::vector<Amplitude>& in,
                                       const Gate& g) {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  std::uint64_t controls = 0;
  for (std::uint32_t c : g.controls) controls |= std::uint64_t{1} << c;
  const std::uint64_t target = std::uint64_t{1} << g.target;

  std::vector<Amplitude> out(in.size(), Amplitude{0.0, 0.0});
  for (std::uint64_t i = 0; i < in.size(); ++i) {
    const Amplitude a = in[i];
    switch (g.kind) {
      case GateKind::H:
        if (i & target) {
          out[i & ~target] += a * inv_sqrt2;
          out[i] -= a * inv_sqrt2;
        } else {
          out[i] += a * inv_sqrt2;
          out[i | target] += a * inv_sqrt2;
        }
        break;
      case GateKind::X:
      case GateKind::Cnot:
      case GateKind::Toffoli:
      case GateKind::Mcx:
        out[(i & controls) == controls ? i ^ target : i] += a;
        break;
      case GateKind::Mcz:
        out[i] += ((i & (controls | target)) == (controls | target)) ? -a : a;
        break;
    }
  }
  return out;
}

Gate random_gate(Xoshiro256& rng, std::uint32_t qubits) {
  const auto kind = static_cast<GateKind>(rng.next_below(kGateKindCount));
  std::vector<std::uint32_t> shuffled(qubits);
  for (std::uint32_t i = 0; i < qubits; ++i) shuffled[i] = i;
  for (std::uint32_t i = 0; i + 1 < qubits; ++i) {
    std::swap(shuffled[i],
              shuffled[i + rng.next_below(qubits - i)]);
  }
  switch (kind) {
    case GateKind::H:
      return Gate::h(shuffled[0]);
    case GateKind::X:
      return Gate::x(shuffled[0]);
    case GateKind::Cnot:
      return Gate::cnot(shuffled[1], shuffled[0]);
    case GateKind::Toffoli:
      return Gate::toffoli(shuffled[1], shuffled[2], shuffled[0]);
    case GateKind::Mcx:
      return Gate::mcx({shuffled[1], shuffled[2], shuffled[3]}, shuffled[0]);
    case GateKind::Mcz:
      return Gate::mcz({shuffled[1]}, shuffled[0]);
  }
  return Gate::x(0);
}

}  // namespace

TEST_CASE("init_state places aux and s qubits at one") {
  const QubitLayout layout = QubitLayout::compact(3, 2);
  const StateVector sv = init_state(layout);
  const std::uint64_t expected =
      (1ull << 3) | (1ull << 8) | (1ull << 9);  // aux, s1, s2
  CHECK(layout.initial_basis_index() == expected);
  CHECK(sv.amplitude(expected) == Amplitude{1.0, 0.0});
  CHECK(sv.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("init_state on a faithful layout sets every s pair") {
  const QubitLayout layout = QubitLayout::faithful(2, 1);
  REQUIRE(layout.total_qubits() == 11);
  const StateVector sv = init_state(layout);
  const std::uint64_t expected = (1ull << 2) | (1ull << 7) | (1ull << 8);
  CHECK(sv.amplitude(expected) == Amplitude{1.0, 0.0});
  // 27-qubit faithful example state: checked via the sparse engine to keep the
  // unit suite light; the dense run happens in the acceptance suite.
  const QubitLayout big = QubitLayout::faithful(3, 2);
  const SparseStateVector sparse = sparse_init_state(big);
  std::uint64_t expected_big = 1ull << big.aux();
  for (std::uint32_t q : big.s_qubits()) expected_big |= 1ull << q;
  CHECK(big.s_qubits().size() == 6);
  CHECK(sparse.amplitude(expected_big) ==
        std::complex<double>{1.0, 0.0});
}

TEST_CASE("init_state reports memory-cap violations") {
  const QubitLayout layout = QubitLayout::compact(3, 2);  // 15 qubits
  try {
    init_state(layout, 14);
    FAIL("expected MemoryCapError");
  } catch (const MemoryCapError& e) {
    CHECK(e.required_qubits() == 15);
    CHECK(e.cap_qubits() == 14);
    CHECK(std::string(e.what()).find("15") != std::string::npos);
  }
}

TEST_CASE("hadamard layer spreads x uniformly and aux evenly") {
  const QubitLayout layout = QubitLayout::compact(3, 2);
  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);

  const auto marginal = x_register_marginal(sv, layout);
  REQUIRE(marginal.size() == 8);
  for (double p : marginal) {
    CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
  }

  double aux_one = 0.0;
  const auto amps = sv.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & (1ull << layout.aux())) aux_one += std::norm(amps[i]);
  }
  CHECK(aux_one == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sv.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("X and H are involutions") {
  StateVector sv(4);
  sv.set_basis(0b1010);
  StateVector copy = sv;
  copy.apply(Gate::x(2));
  copy.apply(Gate::x(2));
  CHECK(copy.amplitude(0b1010) == Amplitude{1.0, 0.0});

  copy.apply(Gate::h(1));
  copy.apply(Gate::h(1));
  CHECK(std::abs(copy.amplitude(0b1010) - Amplitude{1.0, 0.0}) < 1e-12);
}

TEST_CASE("kernels match the scatter reference on random circuits") {
  Xoshiro256 rng(23);
  const std::uint32_t qubits = 5;
  for (int trial = 0; trial < 20; ++trial) {
    StateVector sv(qubits);
    std::vector<Amplitude> ref(sv.dimension(), Amplitude{0.0, 0.0});
    const std::uint64_t start = rng.next_below(sv.dimension());
    sv.set_basis(start);
    ref[start] = Amplitude{1.0, 0.0};

    for (int gi = 0; gi < 30; ++gi) {
      const Gate g = random_gate(rng, qubits);
      sv.apply(g);
      ref = reference_apply(ref, g);
    }
    for (std::uint64_t i = 0; i < sv.dimension(); ++i) {
      CHECK(std::abs(sv.amplitude(i) - ref[i]) < 1e-12);
    }
  }
}

TEST_CASE("norm is preserved after every single gate") {
  Xoshiro256 rng(29);
  StateVector sv(6);
  sv.set_basis(0);
  for (int gi = 0; gi < 200; ++gi) {
    sv.apply(random_gate(rng, 6));
    CHECK(std::abs(sv.norm_squared() - 1.0) < 1e-9);
  }
}

TEST_CASE("classical gates keep basis states classical") {
  Xoshiro256 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    SparseStateVector sv(8, rng.next_below(1ull << 8));
    for (int gi = 0; gi < 40; ++gi) {
      Gate g = random_gate(rng, 8);
      if (g.kind == GateKind::H) g = Gate::x(g.target);  // stay classical
      sv.apply(g);
    }
    CHECK(sv.support_size() == 1);
  }
}

TEST_CASE("linearity: superposed inputs evolve as summed outputs") {
  Xoshiro256 rng(37);
  const std::uint32_t qubits = 5;
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c(qubits);
    for (int gi = 0; gi < 25; ++gi) c.append(random_gate(rng, qubits));

    std::uint64_t a = rng.next_below(1ull << qubits);
    std::uint64_t b = rng.next_below(1ull << qubits);
    if (b == a) b = a ^ 1;
    const std::uint64_t diff = a ^ b;
    std::uint32_t pivot = 0;
    while (!((diff >> pivot) & 1)) ++pivot;
    // The superposition is symmetric in a and b; put the pivot-0 one first
    // so H(pivot) introduces no relative sign.
    if ((a >> pivot) & 1) std::swap(a, b);

    StateVector sa(qubits), sb(qubits);
    sa.set_basis(a);
    sb.set_basis(b);
    sa.apply(c);
    sb.apply(c);

    // (|a> + |b>)/sqrt(2): H on the pivot, then copy the remaining
    // differing bits off the pivot branch.
    StateVector sup(qubits);
    sup.set_basis(a);
    sup.apply(Gate::h(pivot));
    for (std::uint32_t bit = 0; bit < qubits; ++bit) {
      if (bit != pivot && ((diff >> bit) & 1)) {
        sup.apply(Gate::cnot(pivot, bit));
      }
    }
    sup.apply(c);

    for (std::uint64_t i = 0; i < (1ull << qubits); ++i) {
      const Amplitude expected =
          (sa.amplitude(i) + sb.amplitude(i)) * inv_sqrt2;
      CHECK(std::abs(sup.amplitude(i) - expected) < 1e-12);
    }
  }
}

TEST_CASE("sparse engine agrees with the dense engine") {
  Xoshiro256 rng(41);
  const std::uint32_t qubits = 6;
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t start = rng.next_below(1ull << qubits);
    StateVector dense(qubits);
    dense.set_basis(start);
    SparseStateVector sparse(qubits, start);
    for (int gi = 0; gi < 60; ++gi) {
      const Gate g = random_gate(rng, qubits);
      dense.apply(g);
      sparse.apply(g);
    }
    for (std::uint64_t i = 0; i < (1ull << qubits); ++i) {
      CHECK(std::abs(dense.amplitude(i) - sparse.amplitude(i)) < 1e-12);
    }
  }
}

TEST_CASE("marginals sum to one and respect predicates") {
  const QubitLayout layout = QubitLayout::compact(3, 2);
  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);
  const auto marginal = x_register_marginal(sv, layout);
  double total = 0.0;
  for (double p : marginal) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(marked_probability(marginal, [](std::uint64_t) { return true; }) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(marked_probability(marginal, [](std::uint64_t) { return false; }) ==
        0.0);
}

TEST_CASE("sampling is deterministic for a fixed seed") {
  const std::vector<double> marginal = {0.5, 0.0, 0.25, 0.25};
  const MeasurementHistogram h1 = sample_shots(marginal, 2, 1000, 42);
  const MeasurementHistogram h2 = sample_shots(marginal, 2, 1000, 42);
  CHECK(h1.counts == h2.counts);
  const MeasurementHistogram h3 = sample_shots(marginal, 2, 1000, 43);
  CHECK(h1.counts != h3.counts);

  std::uint64_t total = 0;
  for (const auto& [bits, count] : h1.counts) total += count;
  CHECK(total == 1000);
  // x = 1 displays as "01" (x2 x1 order) and has probability zero.
  CHECK(h1.counts.find("01") == h1.counts.end());
}

TEST_CASE("a single shot lands in the support") {
  const std::vector<double> marginal = {0.0, 1.0};
  const MeasurementHistogram h = sample_shots(marginal, 1, 1, 7);
  REQUIRE(h.counts.size() == 1);
  CHECK(h.counts.begin()->first == "1");
}

TEST_CASE("sampled frequencies track the exact marginal within 5 sigma") {
  const QubitLayout layout = QubitLayout::compact(3, 2);
  StateVector sv = init_state(layout);
  apply_hadamard_layer(sv, layout);
  const auto marginal = x_register_marginal(sv, layout);

  const std::uint64_t shots = 10000;
  const MeasurementHistogram hist = sample_shots(marginal, 3, shots, 99);
  for (std::uint64_t x = 0; x < marginal.size(); ++x) {
    const double p = marginal[x];
    const auto it = hist.counts.find(CutAssignment(3, x).to_string());
    const double observed =
        it == hist.counts.end() ? 0.0 : static_cast<double>(it->second);
    const double sigma = std::sqrt(static_cast<double>(shots) * p * (1 - p));
    CHECK(std::abs(observed - static_cast<double>(shots) * p) <=
          5.0 * sigma + 1e-9);
  }
}

TEST_CASE("histogram JSON carries shots, seed, and display-order keys") {
  const std::vector<double> marginal = {0.0, 0.0, 1.0, 0.0};
  const MeasurementHistogram h = sample_shots(marginal, 2, 16, 5);
  CHECK(h.to_json_string() ==
        "{\"shots\":16,\"seed\":5,\"counts\":{\"10\":16}}");
}

TEST_CASE("apply rejects mismatched circuits") {
  StateVector sv(3);
  Circuit c(4);
  c.append(Gate::x(0));
  CHECK_THROWS_AS(sv.apply(c), CircuitError);
  CHECK_THROWS_AS(sv.apply(Gate::x(3)), CircuitError);
}
