// Copyright 2026 The rbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rbc {

// Circuits are 2-cells built from four generators. A Diagram is a word of
// positioned gates; identity wires are implicit in the offsets. Two words
// denote the same circuit iff they differ only by swapping adjacent gates
// with disjoint supports, which canonicalize() decides.

enum class GateKind : std::uint8_t { Swap, Not, T2, T3 };

constexpr std::size_t arity(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Swap: return 2;
    case GateKind::Not: return 1;
    case GateKind::T2: return 2;
    case GateKind::T3: return 3;
  }
  return 0;
}

/// Lowercase mnemonic used by the circuit file format ("swap", "not", "t2", "t3").
const char* gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_from_name(std::string_view name) noexcept;

/// Half-open wire interval [begin, end).
struct WireInterval {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool intersects(const WireInterval& other) const noexcept {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const WireInterval&, const WireInterval&) = default;
};

struct Gate {
  GateKind kind = GateKind::Not;
  std::size_t offset = 0;

  WireInterval support() const noexcept { return {offset, offset + arity(kind)}; }
  Gate shifted(std::ptrdiff_t by) const noexcept {
    return {kind, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(offset) + by)};
  }

  // Ordered by offset first: within a layer this is the canonical order.
  friend auto operator<=>(const Gate& a, const Gate& b) noexcept {
    if (auto c = a.offset <=> b.offset; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const Gate&, const Gate&) = default;
};

WireInterval support(const Gate& g) noexcept;
bool commute(const Gate& a, const Gate& b) noexcept;

/// Index of the first gate whose support leaves [0, width), if any.
std::optional<std::size_t> validate(std::size_t width, std::span<const Gate> gates) noexcept;

class Diagram {
 public:
  Diagram() = default;
  /// Throws Error(OutOfRange) naming the first offending gate index.
  Diagram(std::size_t width, std::vector<Gate> gates);

  static Diagram identity(std::size_t width) { return Diagram(width, {}); }

  std::size_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  /// Literal equality of gate words. Use equivalent() for equality of circuits.
  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.gates_.begin(), a.gates_.end(),
                                                  b.gates_.begin(), b.gates_.end());
  }

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
};

/// Series composition: d1 on top of d2.
Diagram compose_seq(const Diagram& d1, const Diagram& d2);
/// Parallel composition: d2 placed to the right of d1.
Diagram compose_par(const Diagram& d1, const Diagram& d2);

/// Foata normal form: every gate goes into the earliest layer after all
/// earlier gates it overlaps; layers are concatenated, each sorted by offset.
Diagram canonicalize(const Diagram& d);

/// Layer index (0-based) of every gate in list order, as used by canonicalize.
std::vector<std::size_t> layer_of(const Diagram& d);

bool equivalent(const Diagram& d1, const Diagram& d2);

/// Immediate-predecessor structure of the exchange trace: edges i -> j with
/// i < j, overlapping supports, and no k with i ->* k ->* j. Reachability in
/// this graph is "occurs before in every equivalent linearization".
class DependencyDag {
 public:
  explicit DependencyDag(const Diagram& d);

  std::size_t size() const noexcept { return successors_.size(); }
  const std::vector<std::size_t>& successors(std::size_t i) const { return successors_[i]; }
  /// Transitive (strict) reachability i ->+ j.
  bool reaches(std::size_t i, std::size_t j) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::size_t words_ = 0;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::uint64_t> reach_;  // row-major bitsets
};

DependencyDag dependency_dag(const Diagram& d);

}  // namespace rbc
