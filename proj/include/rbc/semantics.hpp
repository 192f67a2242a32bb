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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbc/diagram.hpp"

namespace rbc {

/// Boolean vector indexed by wire. Printed with wire 0 first.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::vector<std::uint8_t> bits);
  BitVec(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1'; throws Error(InvalidArgument) otherwise.
  static BitVec from_string(std::string_view text);
  /// Bits of `value` with wire 0 as the most significant of `width` bits.
  static BitVec from_index(std::uint64_t value, std::size_t width);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  std::uint64_t to_index() const noexcept;
  std::string str() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::size_t kDefaultTruthTableWidth = 12;
/// Absolute ceiling on any requested truth-table width.
inline constexpr std::size_t kMaxTruthTableWidth = 24;

/// Applies one generator to a window of its arity. Throws ArityMismatch.
BitVec apply_gate(GateKind kind, const BitVec& window);

/// Top-to-bottom evaluation. Throws WidthMismatch.
BitVec eval(const Diagram& d, const BitVec& input);

class TruthTable {
 public:
  TruthTable() = default;
  /// rows[i] is the output for input i (ascending binary, wire 0 most significant).
  TruthTable(std::size_t width, std::vector<BitVec> rows);

  std::size_t width() const noexcept { return width_; }
  const std::vector<BitVec>& rows() const noexcept { return rows_; }
  bool is_identity() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<BitVec> rows_;
};

/// Throws WidthTooLarge if d.width() > max_width.
TruthTable truth_table(const Diagram& d, std::size_t max_width = kDefaultTruthTableWidth);

bool is_permutation(const TruthTable& t);

/// One "input -> output" line per row.
std::string format_truth_table(const TruthTable& t);

}  // namespace rbc
