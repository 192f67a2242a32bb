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

#include "rbc/moves.hpp"

#include <algorithm>
#include <sstream>

#include "rbc/error.hpp"

namespace rbc {
namespace {

int letter_weight(char c) noexcept {
  switch (c) {
    case 't': return 1;
    case 'r': return 2;
    case 'l': return 3;
    default: return 0;
  }
}

void require_same_width(const MoveMap& f, const MoveMap& g, const char* what) {
  if (f.width() != g.width()) {
    throw Error(ErrorCode::WidthMismatch, std::string(what) + ": widths " +
                                              std::to_string(f.width()) + " and " +
                                              std::to_string(g.width()));
  }
}

}  // namespace

MoveWord::MoveWord(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (letter_weight(c) == 0) {
      throw Error(ErrorCode::InvalidArgument, "not a move letter: '" + std::string(1, c) + "'");
    }
  }
}

std::strong_ordering operator<=>(const MoveWord& a, const MoveWord& b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = letter_weight(a[i]) <=> letter_weight(b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Ordering word_compare(const MoveWord& a, const MoveWord& b) noexcept {
  const auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Rank word_rank(const MoveWord& w) {
  Rank r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) r = r * 3 + letter_weight(w[i]);
  return r;
}

MoveWord word_unrank(const Rank& rank) {
  if (rank < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
  std::string reversed;
  Rank r = rank;
  while (r > 0) {
    const int digit = static_cast<int>((r - 1) % 3) + 1;
    reversed.push_back(digit == 1 ? 't' : digit == 2 ? 'r' : 'l');
    r = (r - digit) / 3;
  }
  std::reverse(reversed.begin(), reversed.end());
  return MoveWord(reversed);
}

MoveMap::MoveMap(std::vector<std::size_t> src, std::vector<MoveWord> suffixes)
    : src_(std::move(src)), suffixes_(std::move(suffixes)) {
  if (src_.size() != suffixes_.size()) {
    throw Error(ErrorCode::InvalidArgument, "move map needs one suffix per output");
  }
  std::vector<bool> hit(src_.size(), false);
  for (std::size_t s : src_) {
    if (s >= src_.size() || hit[s]) {
      throw Error(ErrorCode::InvalidArgument, "move map source is not a permutation");
    }
    hit[s] = true;
  }
}

MoveMap MoveMap::identity(std::size_t n) {
  std::vector<std::size_t> src(n);
  for (std::size_t i = 0; i < n; ++i) src[i] = i;
  return MoveMap(std::move(src), std::vector<MoveWord>(n));
}

bool MoveMap::is_identity() const {
  for (std::size_t i = 0; i < src_.size(); ++i) {
    if (src_[i] != i || !suffixes_[i].empty()) return false;
  }
  return true;
}

std::vector<MoveWord> map_apply(const MoveMap& f, const std::vector<MoveWord>& xs) {
  if (xs.size() != f.width()) {
    throw Error(ErrorCode::LengthMismatch, "map of width " + std::to_string(f.width()) +
                                               " applied to " + std::to_string(xs.size()) +
                                               " words");
  }
  std::vector<MoveWord> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < f.width(); ++i) out.push_back(xs[f.src(i)] + f.suffix(i));
  return out;
}

MoveMap map_seq(const MoveMap& f, const MoveMap& g) {
  require_same_width(f, g, "map_seq");
  std::vector<std::size_t> src(f.width());
  std::vector<MoveWord> suffixes(f.width());
  for (std::size_t i = 0; i < f.width(); ++i) {
    src[i] = f.src(g.src(i));
    suffixes[i] = f.suffix(g.src(i)) + g.suffix(i);
  }
  return MoveMap(std::move(src), std::move(suffixes));
}

MoveMap map_par(const MoveMap& f, const MoveMap& g) {
  std::vector<std::size_t> src = f.src();
  std::vector<MoveWord> suffixes = f.suffixes();
  for (std::size_t i = 0; i < g.width(); ++i) {
    src.push_back(g.src(i) + f.width());
    suffixes.push_back(g.suffix(i));
  }
  return MoveMap(std::move(src), std::move(suffixes));
}

const char* to_string(MapOrder o) noexcept {
  switch (o) {
    case MapOrder::Less: return "Less";
    case MapOrder::Equal: return "Equal";
    case MapOrder::Greater: return "Greater";
    case MapOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

MapOrder map_compare(const MoveMap& f, const MoveMap& g) {
  require_same_width(f, g, "map_compare");
  if (f.src() != g.src()) return MapOrder::Incomparable;
  bool some_less = false;
  bool some_greater = false;
  for (std::size_t i = 0; i < f.width(); ++i) {
    const auto c = f.suffix(i) <=> g.suffix(i);
    some_less |= c < 0;
    some_greater |= c > 0;
  }
  if (some_less && some_greater) return MapOrder::Incomparable;
  if (some_less) return MapOrder::Less;
  if (some_greater) return MapOrder::Greater;
  return MapOrder::Equal;
}

Rank epsilon_rank(const MoveMap& f) {
  Rank total = 0;
  for (const MoveWord& w : f.suffixes()) total += word_rank(w);
  return total;
}

MoveStep::MoveStep(MoveMap from, MoveMap to) : from_(std::move(from)), to_(std::move(to)) {
  const MapOrder o = map_compare(to_, from_);
  if (o != MapOrder::Equal && o != MapOrder::Less) {
    throw Error(ErrorCode::NotDecreasing,
                std::string("3-cell target is not below its source (") + to_string(o) + ")");
  }
}

MoveStep MoveStep::identity(MoveMap f) {
  MoveMap copy = f;
  return MoveStep(std::move(f), std::move(copy));
}

MoveStep step_compose_0(const MoveStep& a, const MoveStep& b) {
  return MoveStep(map_par(a.from(), b.from()), map_par(a.to(), b.to()));
}

MoveStep step_compose_1(const MoveStep& a, const MoveStep& b) {
  require_same_width(a.from(), b.from(), "step_compose_1");
  return MoveStep(map_seq(a.from(), b.from()), map_seq(a.to(), b.to()));
}

MoveStep step_compose_2(const MoveStep& a, const MoveStep& b) {
  if (!(a.to() == b.from())) {
    throw Error(ErrorCode::NotComposable, "step_compose_2: target of the first step is not the "
                                          "source of the second");
  }
  return MoveStep(a.from(), b.to());
}

std::string display_word(const MoveWord& w) { return w.empty() ? "\"\"" : w.str(); }

std::string format_move_map(const MoveMap& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.width(); ++i) {
    os << "out[" << i << "] <- in[" << f.src(i) << "] ++ \"" << f.suffix(i).str() << "\"\n";
  }
  return os.str();
}

}  // namespace rbc
