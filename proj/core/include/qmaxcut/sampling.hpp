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
#include <map>
#include <string>
#include <vector>

#include "qmaxcut/statevector.hpp"

namespace qmaxcut {

/// xoshiro256** (Blackman & Vigna), seeded through splitmix64. Chosen over
/// the standard-library engines because its double stream is identical on
/// every platform.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_double();

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_[4];
};

/// Shot outcomes over the x register, keyed by display bitstring (x_n...x_1).
struct MeasurementHistogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  /// {"shots": N, "seed": S, "counts": {"010": 512, ...}}
  std::string to_json_string() const;
};

/// Draws i.i.d. samples from an exact x-register marginal. Deterministic for
/// a fixed seed.
MeasurementHistogram sample_shots(const std::vector<double>& x_marginal,
                                  std::uint32_t n, std::uint64_t shots,
                                  std::uint64_t seed);

MeasurementHistogram sample_shots(const StateVector& sv,
                                  const QubitLayout& layout,
                                  std::uint64_t shots, std::uint64_t seed);

}  // namespace qmaxcut
