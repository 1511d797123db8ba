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

#include <iosfwd>
#include <string>
#include <vector>

#include "qmaxcut/circuit.hpp"
#include "qmaxcut/graph.hpp"
#include "qmaxcut/layout.hpp"

namespace qmaxcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;        // graph/argument problems
inline constexpr int kExitMemoryCap = 3;    // simulation would not fit
inline constexpr int kExitVerifyFailed = 4; // witness failed its re-check
inline constexpr int kExitCountingMismatch = 5;  // verify found a bad basis

/// Entry point shared by main() and the tests. `args` excludes argv[0].
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// The verify subcommand's core: sweeps `block` over every basis state and
/// reports mismatches to `out`. Split out so fault-injection tests can hand
/// in a corrupted block. Returns kExitOk or kExitCountingMismatch.
int run_verify_block(const Graph& g, const QubitLayout& layout,
                     const Circuit& block, std::ostream& out);

}  // namespace qmaxcut::cli
