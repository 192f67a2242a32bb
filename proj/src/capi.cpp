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

#include "rbc/rbc.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "rbc/circuit_io.hpp"
#include "rbc/diagram.hpp"
#include "rbc/error.hpp"
#include "rbc/functor.hpp"
#include "rbc/moves.hpp"
#include "rbc/rewrite.hpp"
#include "rbc/semantics.hpp"

struct rbc_diagram {
  rbc::Diagram value;
};

struct rbc_rules {
  std::vector<rbc::Rule> rules;
};

struct rbc_trace {
  rbc::ReductionTrace value;
};

struct rbc_diagram_list {
  std::vector<rbc_diagram> items;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

rbc_status status_of(rbc::ErrorCode code) {
  using rbc::ErrorCode;
  switch (code) {
    case ErrorCode::OutOfRange: return RBC_ERR_OUT_OF_RANGE;
    case ErrorCode::WidthMismatch: return RBC_ERR_WIDTH_MISMATCH;
    case ErrorCode::ArityMismatch: return RBC_ERR_INVALID_ARGUMENT;
    case ErrorCode::WidthTooLarge: return RBC_ERR_WIDTH_TOO_LARGE;
    case ErrorCode::LengthMismatch: return RBC_ERR_INPUT_LENGTH;
    case ErrorCode::NotComposable: return RBC_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotDecreasing: return RBC_ERR_INVALID_RULE;
    case ErrorCode::StaleMatch: return RBC_ERR_STALE_MATCH;
    case ErrorCode::StepLimitExceeded: return RBC_ERR_STEP_LIMIT;
    case ErrorCode::StateLimitExceeded: return RBC_ERR_STATE_LIMIT;
    case ErrorCode::InvalidRule: return RBC_ERR_INVALID_RULE;
    case ErrorCode::Parse: return RBC_ERR_PARSE;
    case ErrorCode::InvalidArgument: return RBC_ERR_INVALID_ARGUMENT;
  }
  return RBC_ERR_INTERNAL;
}

rbc_status fail(rbc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
rbc_status guarded(F&& body) {
  g_last_error.clear();
  g_last_error_line = 0;
  try {
    return body();
  } catch (const rbc::ParseError& e) {
    g_last_error_line = e.line();
    return fail(status_of(e.code()), rbc::describe(e));
  } catch (const rbc::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RBC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RBC_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool read_file(const char* path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

std::size_t cap_or_default(std::size_t max_width) {
  return max_width == 0 ? rbc::kDefaultTruthTableWidth : max_width;
}

#define RBC_REQUIRE(cond)                                                  \
  do {                                                                     \
    if (!(cond)) return fail(RBC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* rbc_last_error(void) { return g_last_error.c_str(); }

size_t rbc_last_error_line(void) { return g_last_error_line; }

void rbc_string_free(char* s) { delete[] s; }

rbc_status rbc_diagram_new(size_t width, rbc_diagram** out) {
  RBC_REQUIRE(out);
  return guarded([&] {
    *out = new rbc_diagram{rbc::Diagram::identity(width)};
    return RBC_OK;
  });
}

rbc_status rbc_diagram_push_gate(rbc_diagram* d, rbc_gate_kind kind, size_t offset) {
  RBC_REQUIRE(d);
  if (kind < RBC_GATE_SWAP || kind > RBC_GATE_T3) {
    return fail(RBC_ERR_INVALID_ARGUMENT, "unknown gate kind");
  }
  return guarded([&] {
    std::vector<rbc::Gate> gates = d->value.gates();
    gates.push_back(rbc::Gate{static_cast<rbc::GateKind>(kind), offset});
    d->value = rbc::Diagram(d->value.width(), std::move(gates));
    return RBC_OK;
  });
}

rbc_status rbc_diagram_parse(const char* text, rbc_diagram** out) {
  RBC_REQUIRE(text && out);
  return guarded([&] {
    *out = new rbc_diagram{rbc::parse_circuit(text)};
    return RBC_OK;
  });
}

rbc_status rbc_diagram_load(const char* path, rbc_diagram** out) {
  RBC_REQUIRE(path && out);
  std::string text;
  if (!read_file(path, text)) return fail(RBC_ERR_IO, std::string("cannot read ") + path);
  return rbc_diagram_parse(text.c_str(), out);
}

void rbc_diagram_free(rbc_diagram* d) { delete d; }

size_t rbc_diagram_width(const rbc_diagram* d) { return d ? d->value.width() : 0; }

size_t rbc_diagram_gate_count(const rbc_diagram* d) { return d ? d->value.size() : 0; }

rbc_status rbc_diagram_gate(const rbc_diagram* d, size_t index, rbc_gate_kind* kind,
                            size_t* offset) {
  RBC_REQUIRE(d && kind && offset);
  if (index >= d->value.size()) return fail(RBC_ERR_OUT_OF_RANGE, "gate index out of range");
  *kind = static_cast<rbc_gate_kind>(d->value[index].kind);
  *offset = d->value[index].offset;
  return RBC_OK;
}

rbc_status rbc_diagram_canonicalize(const rbc_diagram* d, rbc_diagram** out) {
  RBC_REQUIRE(d && out);
  return guarded([&] {
    *out = new rbc_diagram{rbc::canonicalize(d->value)};
    return RBC_OK;
  });
}

int rbc_diagram_equivalent(const rbc_diagram* a, const rbc_diagram* b) {
  if (!a || !b) return 0;
  return rbc::equivalent(a->value, b->value) ? 1 : 0;
}

rbc_status rbc_diagram_to_text(const rbc_diagram* d, char** out) {
  RBC_REQUIRE(d && out);
  return guarded([&] {
    *out = dup_string(rbc::print_circuit(d->value));
    return RBC_OK;
  });
}

rbc_status rbc_truth_table_text(const rbc_diagram* d, size_t max_width, char** out) {
  RBC_REQUIRE(d && out);
  return guarded([&] {
    *out = dup_string(rbc::format_truth_table(rbc::truth_table(d->value, cap_or_default(max_width))));
    return RBC_OK;
  });
}

rbc_status rbc_truth_tables_equal(const rbc_diagram* a, const rbc_diagram* b, size_t max_width,
                                  int* equal) {
  RBC_REQUIRE(a && b && equal);
  return guarded([&] {
    const std::size_t cap = cap_or_default(max_width);
    *equal = a->value.width() == b->value.width() &&
             rbc::truth_table(a->value, cap) == rbc::truth_table(b->value, cap);
    return RBC_OK;
  });
}

rbc_status rbc_eval_text(const rbc_diagram* d, const char* bits, char** out) {
  RBC_REQUIRE(d && bits && out);
  return guarded([&] {
    const rbc::BitVec input = rbc::BitVec::from_string(bits);
    if (input.size() != d->value.width()) {
      return fail(RBC_ERR_INPUT_LENGTH, "input has " + std::to_string(input.size()) +
                                            " bits, circuit has " +
                                            std::to_string(d->value.width()) + " wires");
    }
    *out = dup_string(input.str() + " -> " + rbc::eval(d->value, input).str() + "\n");
    return RBC_OK;
  });
}

rbc_status rbc_measure_text(const rbc_diagram* d, char** out) {
  RBC_REQUIRE(d && out);
  return guarded([&] {
    const rbc::MoveMap m = rbc::phi(d->value);
    std::ostringstream os;
    os << rbc::format_move_map(m) << "rank " << rbc::epsilon_rank(m) << '\n';
    *out = dup_string(os.str());
    return RBC_OK;
  });
}

rbc_status rbc_measure_rank(const rbc_diagram* d, char** out) {
  RBC_REQUIRE(d && out);
  return guarded([&] {
    *out = dup_string(rbc::epsilon_rank(rbc::phi(d->value)).str());
    return RBC_OK;
  });
}

rbc_status rbc_rules_builtin(rbc_rules** out) {
  RBC_REQUIRE(out);
  return guarded([&] {
    *out = new rbc_rules{rbc::builtin_rules()};
    return RBC_OK;
  });
}

rbc_status rbc_rules_parse(const char* text, rbc_rules** out) {
  RBC_REQUIRE(text && out);
  return guarded([&] {
    std::vector<rbc::Rule> rules = rbc::parse_rules(text);
    for (const rbc::Rule& r : rules) {
      if (auto why = rbc::rule_violation(r)) return fail(RBC_ERR_INVALID_RULE, *why);
    }
    *out = new rbc_rules{std::move(rules)};
    return RBC_OK;
  });
}

rbc_status rbc_rules_load(const char* path, rbc_rules** out) {
  RBC_REQUIRE(path && out);
  std::string text;
  if (!read_file(path, text)) return fail(RBC_ERR_IO, std::string("cannot read ") + path);
  return rbc_rules_parse(text.c_str(), out);
}

void rbc_rules_free(rbc_rules* r) { delete r; }

size_t rbc_rules_count(const rbc_rules* r) { return r ? r->rules.size() : 0; }

rbc_status rbc_verify_rules(const rbc_rules* r, int* all_strict, char** report) {
  RBC_REQUIRE(r && all_strict && report);
  return guarded([&] {
    const rbc::StrictnessReport rep = rbc::verify_strict(r->rules);
    *all_strict = rep.all_strict() ? 1 : 0;
    *report = dup_string(rbc::format_strictness_report(rep));
    return RBC_OK;
  });
}

rbc_status rbc_normalize(const rbc_diagram* d, const rbc_rules* r, uint64_t step_limit,
                         rbc_diagram** normal_form, rbc_trace** trace) {
  RBC_REQUIRE(d && r && normal_form);
  return guarded([&] {
    rbc::NormalizeOptions options;
    if (step_limit != 0) options.step_limit = step_limit;
    rbc::NormalizeResult result = rbc::normalize(d->value, r->rules, options);
    *normal_form = new rbc_diagram{std::move(result.normal_form)};
    if (trace) *trace = new rbc_trace{std::move(result.trace)};
    return RBC_OK;
  });
}

void rbc_trace_free(rbc_trace* t) { delete t; }

size_t rbc_trace_step_count(const rbc_trace* t) { return t ? t->value.steps.size() : 0; }

rbc_status rbc_trace_text(const rbc_trace* t, char** out) {
  RBC_REQUIRE(t && out);
  return guarded([&] {
    *out = dup_string(rbc::format_trace(t->value));
    return RBC_OK;
  });
}

rbc_status rbc_trace_verify(const rbc_trace* t, size_t max_width, int* ok, char** report) {
  RBC_REQUIRE(t && ok && report);
  return guarded([&] {
    const rbc::TraceReport rep = rbc::verify_trace(t->value, cap_or_default(max_width));
    *ok = rep.ok() ? 1 : 0;
    *report = dup_string(rbc::format_trace_report(rep));
    return RBC_OK;
  });
}

rbc_status rbc_normal_forms(const rbc_diagram* d, const rbc_rules* r, size_t max_states,
                            rbc_diagram_list** out) {
  RBC_REQUIRE(d && r && out);
  return guarded([&] {
    auto nfs = rbc::all_normal_forms(d->value, r->rules, max_states);
    auto* list = new rbc_diagram_list;
    list->items.reserve(nfs.size());
    for (auto& nf : nfs) list->items.push_back(rbc_diagram{std::move(nf)});
    *out = list;
    return RBC_OK;
  });
}

void rbc_diagram_list_free(rbc_diagram_list* l) { delete l; }

size_t rbc_diagram_list_size(const rbc_diagram_list* l) { return l ? l->items.size() : 0; }

const rbc_diagram* rbc_diagram_list_at(const rbc_diagram_list* l, size_t index) {
  if (!l || index >= l->items.size()) return nullptr;
  return &l->items[index];
}

}  // extern "C"
