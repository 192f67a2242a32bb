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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbc {

// The ordered monoid of moves: words over {l, r, t} compared by length and
// then lexicographically with t < r < l. The order is isomorphic to (N, <),
// so ranks are unbounded naturals.

using Rank = boost::multiprecision::cpp_int;

enum class Move : char { L = 'l', R = 'r', T = 't' };

class MoveWord {
 public:
  MoveWord() = default;
  /// Throws Error(InvalidArgument) on letters outside {l, r, t}.
  explicit MoveWord(std::string_view letters);

  static MoveWord epsilon() { return {}; }
  static MoveWord of(Move m) { return MoveWord(std::string(1, static_cast<char>(m))); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& str() const noexcept { return letters_; }

  MoveWord& operator+=(const MoveWord& other) {
    letters_ += other.letters_;
    return *this;
  }
  friend MoveWord operator+(MoveWord a, const MoveWord& b) { return a += b; }

  friend bool operator==(const MoveWord&, const MoveWord&) = default;
  /// The move order; not the std::string order.
  friend std::strong_ordering operator<=>(const MoveWord& a, const MoveWord& b) noexcept;

 private:
  std::string letters_;
};

enum class Ordering { Less, Equal, Greater };
Ordering word_compare(const MoveWord& a, const MoveWord& b) noexcept;

/// Position in the move order: bijective base 3 with digits t=1, r=2, l=3.
Rank word_rank(const MoveWord& w);
/// Inverse of word_rank. Throws Error(InvalidArgument) on negative input.
MoveWord word_unrank(const Rank& rank);

/// A 2-cell of the move category in permutation-plus-suffix form:
/// output i = input[src(i)] followed by suffix(i).
class MoveMap {
 public:
  MoveMap() = default;
  /// Throws Error(InvalidArgument) unless src is a permutation of 0..n-1
  /// and |suffixes| = n.
  MoveMap(std::vector<std::size_t> src, std::vector<MoveWord> suffixes);

  static MoveMap identity(std::size_t n);

  std::size_t width() const noexcept { return src_.size(); }
  const std::vector<std::size_t>& src() const noexcept { return src_; }
  const std::vector<MoveWord>& suffixes() const noexcept { return suffixes_; }
  std::size_t src(std::size_t i) const { return src_[i]; }
  const MoveWord& suffix(std::size_t i) const { return suffixes_[i]; }
  bool is_identity() const;

  friend bool operator==(const MoveMap&, const MoveMap&) = default;

 private:
  std::vector<std::size_t> src_;
  std::vector<MoveWord> suffixes_;
};

/// Throws Error(LengthMismatch) unless |xs| = f.width().
std::vector<MoveWord> map_apply(const MoveMap& f, const std::vector<MoveWord>& xs);

/// f then g (f on top). Throws Error(WidthMismatch).
MoveMap map_seq(const MoveMap& f, const MoveMap& g);
/// f beside g; g's wires follow f's.
MoveMap map_par(const MoveMap& f, const MoveMap& g);

enum class MapOrder { Less, Equal, Greater, Incomparable };
const char* to_string(MapOrder o) noexcept;

/// Strict pointwise order. Maps with different routing are incomparable;
/// otherwise suffixes are compared in the componentwise product order.
/// Throws Error(WidthMismatch).
MapOrder map_compare(const MoveMap& f, const MoveMap& g);

/// Total rank of f applied to the all-epsilon vector, i.e. the sum of the
/// suffix ranks. Strictly decreases along any strictly decreasing chain.
Rank epsilon_rank(const MoveMap& f);

/// A 3-cell <from, to> of the move category; always from >= to.
class MoveStep {
 public:
  /// Throws Error(NotDecreasing) unless from == to or to < from.
  MoveStep(MoveMap from, MoveMap to);

  static MoveStep identity(MoveMap f);

  const MoveMap& from() const noexcept { return from_; }
  const MoveMap& to() const noexcept { return to_; }
  bool is_identity() const noexcept { return from_ == to_; }

  friend bool operator==(const MoveStep&, const MoveStep&) = default;

 private:
  MoveMap from_;
  MoveMap to_;
};

MoveStep step_compose_0(const MoveStep& a, const MoveStep& b);
MoveStep step_compose_1(const MoveStep& a, const MoveStep& b);
/// Throws Error(NotComposable) unless a.to() == b.from().
MoveStep step_compose_2(const MoveStep& a, const MoveStep& b);

/// Word as printed in reports: the letters, or "" for the empty word.
std::string display_word(const MoveWord& w);

/// n lines `out[i] <- in[src(i)] ++ "suffix"`.
std::string format_move_map(const MoveMap& f);

}  // namespace rbc
