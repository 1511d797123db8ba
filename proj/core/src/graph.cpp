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

#include "qmaxcut/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace qmaxcut {

namespace {

std::uint64_t edge_key(std::uint32_t k, std::uint32_t p) {
  auto lo = std::min(k, p);
  auto hi = std::max(k, p);
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

}  // namespace

Graph::Graph(std::uint32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n == 0) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.k < 1 || e.k > n_ || e.p < 1 || e.p > n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.k == e.p) {
      throw std::invalid_argument("self-loop");
    }
    if (!seen.insert(edge_key(e.k, e.p)).second) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

CutAssignment::CutAssignment(std::uint32_t n, std::uint64_t bits)
    : n_(n), bits_(bits) {
  if (n == 0 || n > 63) {
    throw std::invalid_argument("assignment length must be in [1, 63]");
  }
  if (bits >> n) {
    throw std::invalid_argument("assignment bits exceed vertex count");
  }
}

CutAssignment CutAssignment::from_string(const std::string& text) {
  if (text.empty() || text.size() > 63) {
    throw std::invalid_argument("assignment string length must be in [1, 63]");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("assignment string must be binary");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return CutAssignment(static_cast<std::uint32_t>(text.size()), bits);
}

int CutAssignment::bit(std::uint32_t d) const {
  if (d < 1 || d > n_) {
    throw std::invalid_argument("vertex index out of range");
  }
  return static_cast<int>((bits_ >> (d - 1)) & 1u);
}

CutAssignment CutAssignment::complement() const {
  std::uint64_t mask = (n_ == 63) ? ~0ull >> 1 : (1ull << n_) - 1;
  return CutAssignment(n_, bits_ ^ mask);
}

std::string CutAssignment::to_string() const {
  std::string s;
  s.reserve(n_);
  for (std::uint32_t d = n_; d >= 1; --d) {
    s.push_back(static_cast<char>('0' + bit(d)));
  }
  return s;
}

std::vector<std::uint32_t> CutAssignment::v1() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n_; ++d) {
    if (bit(d)) out.push_back(d);
  }
  return out;
}

std::vector<std::uint32_t> CutAssignment::v2() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n_; ++d) {
    if (!bit(d)) out.push_back(d);
  }
  return out;
}

int edge_in_cut(int x_k, int x_p) {
  return ((x_k & ~x_p) | (~x_k & x_p)) & 1;
}

int edge_not_in_cut(int x_k, int x_p) {
  return ((~x_k & ~x_p) | (x_k & x_p)) & 1;
}

std::size_t cut_size(const Graph& g, const CutAssignment& a) {
  if (a.n() != g.n()) {
    throw std::invalid_argument("assignment length does not match graph");
  }
  return cut_size_bits(g, a.bits());
}

std::size_t cut_size_bits(const Graph& g, std::uint64_t bits) {
  std::size_t total = 0;
  for (const Edge& e : g.edges()) {
    int xk = static_cast<int>((bits >> (e.k - 1)) & 1u);
    int xp = static_cast<int>((bits >> (e.p - 1)) & 1u);
    total += static_cast<std::size_t>(edge_in_cut(xk, xp));
  }
  return total;
}

CutReport brute_force_max_cut(const Graph& g, std::uint32_t cap) {
  if (g.n() > cap) {
    throw std::invalid_argument("vertex count " + std::to_string(g.n()) +
                                " exceeds exhaustive-search cap " +
                                std::to_string(cap));
  }
  const std::uint64_t total = 1ull << g.n();
  std::size_t best = 0;
  std::uint64_t witness = 0;
  std::uint64_t count = 1;  // x = 0 has cut size 0
  for (std::uint64_t x = 1; x < total; ++x) {
    std::size_t size = cut_size_bits(g, x);
    if (size > best) {
      best = size;
      witness = x;
      count = 1;
    } else if (size == best) {
      ++count;
    }
  }
  return CutReport{best, CutAssignment(g.n(), witness), count};
}

std::uint64_t count_cuts_of_size(const Graph& g, std::size_t t,
                                 std::uint32_t cap) {
  if (g.n() > cap) {
    throw std::invalid_argument("vertex count " + std::to_string(g.n()) +
                                " exceeds exhaustive-search cap " +
                                std::to_string(cap));
  }
  if (t > g.m()) {
    return 0;  // no cut can exceed the edge count
  }
  const std::uint64_t total = 1ull << g.n();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (cut_size_bits(g, x) == t) ++count;
  }
  return count;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool parse_two_u32(const std::string& line, std::uint64_t& a,
                   std::uint64_t& b) {
  std::istringstream iss(line);
  long long x = -1, y = -1;
  if (!(iss >> x >> y) || x < 0 || y < 0) return false;
  std::string rest;
  if (iss >> rest) return false;
  a = static_cast<std::uint64_t>(x);
  b = static_cast<std::uint64_t>(y);
  return true;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  std::uint64_t n = 0, m = 0;
  bool got_header = false;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;

    if (!got_header) {
      if (!parse_two_u32(line, n, m) || n < 1 || n > 0xffffffffull ||
          m > 0xffffffffull) {
        throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                         "expected header \"n m\" with n >= 1");
      }
      got_header = true;
      header_line = line_no;
      edges.reserve(m);
      continue;
    }

    if (edges.size() == m) {
      throw ParseError(ParseErrorKind::TrailingData, line_no,
                       "more than the " + std::to_string(m) +
                           " edges announced in the header");
    }

    std::uint64_t k = 0, p = 0;
    if (!parse_two_u32(line, k, p) || k < 1 || p < 1) {
      throw ParseError(ParseErrorKind::MalformedEdge, line_no,
                       "expected edge \"k p\" with positive vertex ids");
    }
    if (k > n || p > n) {
      throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                       "vertex id exceeds n = " + std::to_string(n));
    }
    if (k == p) {
      throw ParseError(ParseErrorKind::SelfLoop, line_no,
                       "self-loop on vertex " + std::to_string(k));
    }
    if (!seen
             .insert(edge_key(static_cast<std::uint32_t>(k),
                              static_cast<std::uint32_t>(p)))
             .second) {
      throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                       "duplicate edge (" + std::to_string(k) + ", " +
                           std::to_string(p) + ")");
    }
    edges.push_back(
        Edge{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(p)});
  }

  if (!got_header) {
    throw ParseError(ParseErrorKind::MalformedHeader, line_no + 1,
                     "missing header \"n m\"");
  }
  if (edges.size() != m) {
    throw ParseError(ParseErrorKind::MissingEdges, line_no + 1,
                     "header at line " + std::to_string(header_line) +
                         " announced " + std::to_string(m) + " edges, got " +
                         std::to_string(edges.size()));
  }
  return Graph(static_cast<std::uint32_t>(n), std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph(iss);
}

}  // namespace qmaxcut
