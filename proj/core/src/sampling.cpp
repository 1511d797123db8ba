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

#include "qmaxcut/sampling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qmaxcut/graph.hpp"

namespace qmaxcut {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) {
    word = splitmix64(sm);
  }
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Xoshiro256::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t Xoshiro256::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("bound must be positive");
  }
  // Rejection sampling over the top of the range to stay unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return draw % bound;
}

std::string MeasurementHistogram::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["shots"] = shots;
  doc["seed"] = seed;
  nlohmann::ordered_json counts_doc = nlohmann::ordered_json::object();
  for (const auto& [bitstring, count] : counts) {
    counts_doc[bitstring] = count;
  }
  doc["counts"] = counts_doc;
  return doc.dump();
}

MeasurementHistogram sample_shots(const std::vector<double>& x_marginal,
                                  std::uint32_t n, std::uint64_t shots,
                                  std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shots must be >= 1");
  }
  if (x_marginal.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("marginal size does not match register width");
  }

  std::vector<double> cumulative(x_marginal.size());
  double running = 0.0;
  for (std::size_t i = 0; i < x_marginal.size(); ++i) {
    running += x_marginal[i];
    cumulative[i] = running;
  }
  const double total = cumulative.back();

  Xoshiro256 rng(seed);
  std::map<std::uint64_t, std::uint64_t> raw;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.next_double() * total;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::uint64_t x = it == cumulative.end()
                                ? x_marginal.size() - 1
                                : static_cast<std::uint64_t>(
                                      it - cumulative.begin());
    ++raw[x];
  }

  MeasurementHistogram hist;
  hist.shots = shots;
  hist.seed = seed;
  for (const auto& [x, count] : raw) {
    hist.counts[CutAssignment(n, x).to_string()] = count;
  }
  return hist;
}

MeasurementHistogram sample_shots(const StateVector& sv,
                                  const QubitLayout& layout,
                                  std::uint64_t shots, std::uint64_t seed) {
  return sample_shots(x_register_marginal(sv, layout), layout.n(), shots,
                      seed);
}

}  // namespace qmaxcut
