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
#include <iosfwd>
#include <string>
#include <vector>

#include "qmaxcut/errors.hpp"

namespace qmaxcut {

/// Undirected edge between 1-indexed vertices k and p.
struct Edge {
  std::uint32_t k;
  std::uint32_t p;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected, unweighted graph. Vertices are 1-indexed; the edge list keeps
/// file order because it fixes the order in which counter updates are applied.
class Graph {
 public:
  /// Validates: endpoints in [1, n], no self-loops, no duplicates regardless
  /// of orientation. Throws std::invalid_argument on violation.
  Graph(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return static_cast<std::uint32_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::uint32_t n_;
  std::vector<Edge> edges_;
};

/// One of the 2^n vertex bipartitions, stored as the n-bit word x_n...x_1.
/// Bit d (1-indexed) set means vertex d is in V1; clear means V2. Display
/// order puts x_n leftmost, so for n=3 the word 2 prints as "010".
class CutAssignment {
 public:
  /// Single-vertex all-V2 placeholder; reports overwrite it.
  CutAssignment() : n_(1), bits_(0) {}
  CutAssignment(std::uint32_t n, std::uint64_t bits);

  static CutAssignment from_string(const std::string& text);

  std::uint32_t n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int bit(std::uint32_t d) const;  // 1-indexed vertex
  CutAssignment complement() const;
  std::string to_string() const;

  /// Vertices in V1 (bit set) and V2 (bit clear), ascending.
  std::vector<std::uint32_t> v1() const;
  std::vector<std::uint32_t> v2() const;

  friend bool operator==(const CutAssignment&, const CutAssignment&) = default;

 private:
  std::uint32_t n_;
  std::uint64_t bits_;
};

struct CutReport {
  std::size_t size = 0;
  CutAssignment assignment;
  std::uint64_t optimal_count = 0;  // assignments achieving the maximum
};

/// 1 iff the edge endpoints land in different subsets:
/// (x_k AND NOT x_p) OR (NOT x_k AND x_p).
int edge_in_cut(int x_k, int x_p);

/// 1 iff both endpoints land in the same subset:
/// (NOT x_k AND NOT x_p) OR (x_k AND x_p). Complement of edge_in_cut.
int edge_not_in_cut(int x_k, int x_p);

/// Number of edges crossing the bipartition. Throws std::invalid_argument on
/// length mismatch.
std::size_t cut_size(const Graph& g, const CutAssignment& a);

/// Same, on a raw bit word (bit d-1 holds x_d). Callers guarantee the word
/// fits the graph.
std::size_t cut_size_bits(const Graph& g, std::uint64_t bits);

inline constexpr std::uint32_t kDefaultExhaustiveCap = 24;

/// Enumerates all 2^n assignments. Witness is the lowest bit word achieving
/// the maximum. Throws std::invalid_argument when n exceeds the cap.
CutReport brute_force_max_cut(const Graph& g,
                              std::uint32_t cap = kDefaultExhaustiveCap);

/// Number of assignments whose cut size is exactly t. Any t is accepted;
/// values above m yield 0.
std::uint64_t count_cuts_of_size(const Graph& g, std::size_t t,
                                 std::uint32_t cap = kDefaultExhaustiveCap);

/// Parses the text graph format: line 1 "n m", then exactly m lines "k p"
/// with 1-indexed endpoints. '#' comment lines and blank lines are ignored.
/// Throws ParseError naming the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

}  // namespace qmaxcut
