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

#include "rbc/diagram.hpp"

#include <numeric>
#include <string>

#include "rbc/error.hpp"

namespace rbc {

const char* gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Swap: return "swap";
    case GateKind::Not: return "not";
    case GateKind::T2: return "t2";
    case GateKind::T3: return "t3";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) noexcept {
  if (name == "swap") return GateKind::Swap;
  if (name == "not") return GateKind::Not;
  if (name == "t2") return GateKind::T2;
  if (name == "t3") return GateKind::T3;
  return std::nullopt;
}

WireInterval support(const Gate& g) noexcept { return g.support(); }

bool commute(const Gate& a, const Gate& b) noexcept {
  return !a.support().intersects(b.support());
}

std::optional<std::size_t> validate(std::size_t width, std::span<const Gate> gates) noexcept {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].support().end > width) return i;
  }
  return std::nullopt;
}

Diagram::Diagram(std::size_t width, std::vector<Gate> gates)
    : width_(width), gates_(std::move(gates)) {
  if (auto bad = validate(width_, gates_)) {
    const Gate& g = gates_[*bad];
    throw Error(ErrorCode::OutOfRange,
                "gate " + std::to_string(*bad) + " (" + gate_name(g.kind) + " " +
                    std::to_string(g.offset) + ") exceeds width " + std::to_string(width_));
  }
}

Diagram compose_seq(const Diagram& d1, const Diagram& d2) {
  if (d1.width() != d2.width()) {
    throw Error(ErrorCode::WidthMismatch, "series composition of widths " +
                                              std::to_string(d1.width()) + " and " +
                                              std::to_string(d2.width()));
  }
  std::vector<Gate> gates = d1.gates();
  gates.insert(gates.end(), d2.gates().begin(), d2.gates().end());
  return Diagram(d1.width(), std::move(gates));
}

Diagram compose_par(const Diagram& d1, const Diagram& d2) {
  std::vector<Gate> gates = d1.gates();
  gates.reserve(d1.size() + d2.size());
  const auto shift = static_cast<std::ptrdiff_t>(d1.width());
  for (const Gate& g : d2.gates()) gates.push_back(g.shifted(shift));
  return Diagram(d1.width() + d2.width(), std::move(gates));
}

std::vector<std::size_t> layer_of(const Diagram& d) {
  std::vector<std::size_t> next_free(d.width(), 0);
  std::vector<std::size_t> layers;
  layers.reserve(d.size());
  for (const Gate& g : d.gates()) {
    const WireInterval s = g.support();
    std::size_t layer = 0;
    for (std::size_t w = s.begin; w < s.end; ++w) layer = std::max(layer, next_free[w]);
    for (std::size_t w = s.begin; w < s.end; ++w) next_free[w] = layer + 1;
    layers.push_back(layer);
  }
  return layers;
}

Diagram canonicalize(const Diagram& d) {
  const std::vector<std::size_t> layers = layer_of(d);
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (layers[a] != layers[b]) return layers[a] < layers[b];
    return d[a].offset < d[b].offset;
  });
  std::vector<Gate> gates;
  gates.reserve(d.size());
  for (std::size_t i : order) gates.push_back(d[i]);
  return Diagram(d.width(), std::move(gates));
}

bool equivalent(const Diagram& d1, const Diagram& d2) {
  return d1.width() == d2.width() && d1.size() == d2.size() &&
         canonicalize(d1).gates() == canonicalize(d2).gates();
}

DependencyDag::DependencyDag(const Diagram& d)
    : words_((d.size() + 63) / 64), successors_(d.size()), reach_(d.size() * words_, 0) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last_on_wire(d.width(), kNone);
  auto ancestors = [&](std::size_t j) { return reach_.data() + j * words_; };
  auto has = [&](std::size_t j, std::size_t i) {
    return (ancestors(j)[i / 64] >> (i % 64)) & 1U;
  };

  for (std::size_t j = 0; j < d.size(); ++j) {
    const WireInterval s = d[j].support();
    std::vector<std::size_t> preds;
    for (std::size_t w = s.begin; w < s.end; ++w) {
      const std::size_t p = last_on_wire[w];
      if (p != kNone && std::find(preds.begin(), preds.end(), p) == preds.end()) preds.push_back(p);
      last_on_wire[w] = j;
    }
    std::uint64_t* anc = ancestors(j);
    for (std::size_t p : preds) {
      anc[p / 64] |= std::uint64_t{1} << (p % 64);
      const std::uint64_t* panc = ancestors(p);
      for (std::size_t k = 0; k < words_; ++k) anc[k] |= panc[k];
    }
    // A per-wire predecessor is immediate unless another one already sees it.
    for (std::size_t p : preds) {
      bool covered = false;
      for (std::size_t q : preds) {
        if (q != p && has(q, p)) {
          covered = true;
          break;
        }
      }
      if (!covered) successors_[p].push_back(j);
    }
  }
  for (auto& succ : successors_) std::sort(succ.begin(), succ.end());
}

bool DependencyDag::reaches(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) return false;
  return (reach_[j * words_ + i / 64] >> (i % 64)) & 1U;
}

std::vector<std::pair<std::size_t, std::size_t>> DependencyDag::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : successors_[i]) out.emplace_back(i, j);
  }
  return out;
}

DependencyDag dependency_dag(const Diagram& d) { return DependencyDag(d); }

}  // namespace rbc
