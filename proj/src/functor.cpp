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

#include "rbc/functor.hpp"

#include <sstream>

#include "rbc/error.hpp"
#include "rbc/rewrite.hpp"

namespace rbc {

MoveMap phi_gate(GateKind kind) {
  const MoveWord l = MoveWord::of(Move::L);
  const MoveWord r = MoveWord::of(Move::R);
  const MoveWord t = MoveWord::of(Move::T);
  switch (kind) {
    case GateKind::Swap: return MoveMap({1, 0}, {l, r});
    case GateKind::Not: return MoveMap({0}, {t});
    case GateKind::T2: return MoveMap({0, 1}, {t, t});
    case GateKind::T3: return MoveMap({0, 1, 2}, {t, t, t});
  }
  throw Error(ErrorCode::InvalidArgument, "unknown gate kind");
}

MoveMap phi(const Diagram& d) {
  // Composing with a padded generator only touches the gate's window, so
  // the fold updates the window in place instead of building full-width maps.
  std::vector<std::size_t> src(d.width());
  std::vector<MoveWord> suffixes(d.width());
  for (std::size_t i = 0; i < d.width(); ++i) src[i] = i;
  for (const Gate& g : d.gates()) {
    const MoveMap local = phi_gate(g.kind);
    const std::size_t n = local.width();
    std::vector<std::size_t> new_src(n);
    std::vector<MoveWord> new_suffix(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t from = g.offset + local.src(i);
      new_src[i] = src[from];
      new_suffix[i] = suffixes[from] + local.suffix(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      src[g.offset + i] = new_src[i];
      suffixes[g.offset + i] = std::move(new_suffix[i]);
    }
  }
  return MoveMap(std::move(src), std::move(suffixes));
}

MoveStep phi_rule(const Rule& r) {
  if (r.lhs.width() != r.rhs.width()) {
    throw Error(ErrorCode::WidthMismatch, "rule " + r.name + " has sides of different width");
  }
  return MoveStep(phi(r.lhs), phi(r.rhs));
}

bool StrictnessReport::all_strict() const noexcept {
  return strict_count() == entries.size();
}

std::size_t StrictnessReport::strict_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.strict() ? 1 : 0;
  return n;
}

StrictnessReport verify_strict(const std::vector<Rule>& rules) {
  StrictnessReport report;
  for (const Rule& r : rules) {
    StrictnessEntry e;
    e.rule = r.name;
    e.lhs = phi(r.lhs);
    e.rhs = phi(r.rhs);
    if (e.lhs.width() != e.rhs.width()) {
      e.verdict = MapOrder::Incomparable;
    } else {
      e.verdict = map_compare(e.lhs, e.rhs);
      if (e.lhs.src() == e.rhs.src()) {
        for (std::size_t i = 0; i < e.lhs.width(); ++i) {
          if (!(e.lhs.suffix(i) == e.rhs.suffix(i))) {
            e.witness_wire = i;
            break;
          }
        }
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string format_suffix_vector(const MoveMap& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.width(); ++i) {
    if (i) s += ", ";
    s += display_word(f.suffix(i));
  }
  return s + ")";
}

std::string format_strictness_report(const StrictnessReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << "RULE " << e.rule << ": ";
    if (e.strict()) {
      const std::size_t i = *e.witness_wire;
      os << "STRICT (witness: " << display_word(e.lhs.suffix(i)) << " > "
         << display_word(e.rhs.suffix(i)) << " at wire " << i << ") "
         << format_suffix_vector(e.lhs) << " > " << format_suffix_vector(e.rhs);
    } else {
      os << "NOT STRICT (" << to_string(e.verdict) << ") " << format_suffix_vector(e.lhs)
         << " vs " << format_suffix_vector(e.rhs);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace rbc
