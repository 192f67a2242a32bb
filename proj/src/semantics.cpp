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

#include "rbc/semantics.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "rbc/error.hpp"

namespace rbc {

BitVec::BitVec(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitVec::BitVec(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(b ? 1 : 0);
}

BitVec BitVec::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidArgument, "not a bit string: '" + std::string(text) + "'");
    }
    bits.push_back(c == '1');
  }
  return BitVec(std::move(bits));
}

BitVec BitVec::from_index(std::uint64_t value, std::size_t width) {
  std::vector<std::uint8_t> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[i] = (value >> (width - 1 - i)) & 1U;
  return BitVec(std::move(bits));
}

std::uint64_t BitVec::to_index() const noexcept {
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1) | b;
  return v;
}

std::string BitVec::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitVec apply_gate(GateKind kind, const BitVec& window) {
  if (window.size() != arity(kind)) {
    throw Error(ErrorCode::ArityMismatch, std::string(gate_name(kind)) + " expects " +
                                              std::to_string(arity(kind)) + " bits, got " +
                                              std::to_string(window.size()));
  }
  BitVec out = window;
  switch (kind) {
    case GateKind::Swap:
      out.set(0, window[1]);
      out.set(1, window[0]);
      break;
    case GateKind::Not:
      out.set(0, !window[0]);
      break;
    case GateKind::T2:
      out.set(1, window[1] != window[0]);
      break;
    case GateKind::T3:
      out.set(2, window[2] != (window[0] && window[1]));
      break;
  }
  return out;
}

BitVec eval(const Diagram& d, const BitVec& input) {
  if (input.size() != d.width()) {
    throw Error(ErrorCode::WidthMismatch, "input has " + std::to_string(input.size()) +
                                              " bits, diagram has " + std::to_string(d.width()) +
                                              " wires");
  }
  BitVec state = input;
  for (const Gate& g : d.gates()) {
    const std::size_t n = arity(g.kind);
    std::vector<std::uint8_t> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = state[g.offset + k];
    const BitVec out = apply_gate(g.kind, BitVec(std::move(w)));
    for (std::size_t k = 0; k < n; ++k) state.set(g.offset + k, out[k]);
  }
  return state;
}

TruthTable::TruthTable(std::size_t width, std::vector<BitVec> rows)
    : width_(width), rows_(std::move(rows)) {
  if (width_ > kMaxTruthTableWidth || rows_.size() != (std::size_t{1} << width_)) {
    throw Error(ErrorCode::InvalidArgument, "truth table of width " + std::to_string(width_) +
                                                " needs 2^width rows");
  }
  for (const BitVec& r : rows_) {
    if (r.size() != width_) throw Error(ErrorCode::WidthMismatch, "truth table row width");
  }
}

bool TruthTable::is_identity() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].to_index() != i) return false;
  }
  return true;
}

TruthTable truth_table(const Diagram& d, std::size_t max_width) {
  const std::size_t cap = std::min(max_width, kMaxTruthTableWidth);
  if (d.width() > cap) {
    throw Error(ErrorCode::WidthTooLarge, "width " + std::to_string(d.width()) +
                                              " exceeds truth-table cap " + std::to_string(cap));
  }
  const std::uint64_t count = std::uint64_t{1} << d.width();
  std::vector<BitVec> rows;
  rows.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) rows.push_back(eval(d, BitVec::from_index(x, d.width())));
  return TruthTable(d.width(), std::move(rows));
}

bool is_permutation(const TruthTable& t) {
  std::unordered_set<std::uint64_t> seen;
  for (const BitVec& r : t.rows()) {
    if (!seen.insert(r.to_index()).second) return false;
  }
  return true;
}

std::string format_truth_table(const TruthTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    os << BitVec::from_index(i, t.width()).str() << " -> " << t.rows()[i].str() << '\n';
  }
  return os.str();
}

}  // namespace rbc
