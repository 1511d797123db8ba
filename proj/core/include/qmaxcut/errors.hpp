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
#include <stdexcept>
#include <string>

namespace qmaxcut {

/// What went wrong while reading a graph file.
enum class ParseErrorKind {
  MalformedHeader,
  MalformedEdge,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  MissingEdges,
  TrailingData,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Invalid gate construction or qubit indexing.
class CircuitError : public std::runtime_error {
 public:
  explicit CircuitError(const std::string& what) : std::runtime_error(what) {}
};

/// A dense statevector would exceed the configured amplitude budget.
class MemoryCapError : public std::runtime_error {
 public:
  MemoryCapError(std::uint32_t required_qubits, std::uint32_t cap_qubits,
                 const std::string& what)
      : std::runtime_error(what),
        required_qubits_(required_qubits),
        cap_qubits_(cap_qubits) {}

  std::uint32_t required_qubits() const { return required_qubits_; }
  std::uint32_t cap_qubits() const { return cap_qubits_; }

 private:
  std::uint32_t required_qubits_;
  std::uint32_t cap_qubits_;
};

/// The solver accepted a threshold but the extracted witness failed its
/// classical re-check, or the t loop ran out. Never returned silently.
class SolveError : public std::runtime_error {
 public:
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmaxcut
