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

// rbc: command-line front end for the reversible circuit rewriting library.
//
//   rbc check FILE
//   rbc truth FILE
//   rbc eval FILE --input BITS
//   rbc measure FILE
//   rbc normalize FILE [--trace] [--verify] [--max-steps N]
//   rbc nfs FILE [--max-states N]
//   rbc verify-rules
//
// --rules FILE replaces the built-in catalog. RBC_MAX_WIDTH overrides the
// truth-table width cap.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "rbc/rbc.h"

namespace {

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,
  kVerificationFailed = 3,
  kStepLimit = 4,
  kStateLimit = 5,
};

struct DiagramDeleter {
  void operator()(rbc_diagram* d) const { rbc_diagram_free(d); }
};
struct RulesDeleter {
  void operator()(rbc_rules* r) const { rbc_rules_free(r); }
};
struct TraceDeleter {
  void operator()(rbc_trace* t) const { rbc_trace_free(t); }
};
struct ListDeleter {
  void operator()(rbc_diagram_list* l) const { rbc_diagram_list_free(l); }
};
using DiagramPtr = std::unique_ptr<rbc_diagram, DiagramDeleter>;
using RulesPtr = std::unique_ptr<rbc_rules, RulesDeleter>;
using TracePtr = std::unique_ptr<rbc_trace, TraceDeleter>;
using ListPtr = std::unique_ptr<rbc_diagram_list, ListDeleter>;

class Error {
 public:
  Error(int exit_code, std::string message) : exit_code_(exit_code), message_(std::move(message)) {}
  int exit_code() const { return exit_code_; }
  const std::string& message() const { return message_; }

 private:
  int exit_code_;
  std::string message_;
};

int exit_code_for(rbc_status s) {
  switch (s) {
    case RBC_ERR_PARSE:
    case RBC_ERR_OUT_OF_RANGE:
    case RBC_ERR_INVALID_RULE:
    case RBC_ERR_IO:
      return kInvalidInput;
    case RBC_ERR_STEP_LIMIT: return kStepLimit;
    case RBC_ERR_STATE_LIMIT: return kStateLimit;
    default: return kFailure;
  }
}

void check(rbc_status s, const std::string& context) {
  if (s != RBC_OK) {
    std::string msg = context.empty() ? rbc_last_error() : context + ": " + rbc_last_error();
    throw Error(exit_code_for(s), msg);
  }
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  rbc_string_free(s);
  return out;
}

size_t max_width_from_env() {
  const char* env = std::getenv("RBC_MAX_WIDTH");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(kFailure, std::string("bad RBC_MAX_WIDTH: ") + env);
  return static_cast<size_t>(v);
}

DiagramPtr load_diagram(const std::string& path) {
  rbc_diagram* d = nullptr;
  check(rbc_diagram_load(path.c_str(), &d), path);
  return DiagramPtr(d);
}

RulesPtr load_rules(const std::string& path) {
  rbc_rules* r = nullptr;
  if (path.empty()) {
    check(rbc_rules_builtin(&r), "built-in rules");
  } else {
    check(rbc_rules_load(path.c_str(), &r), path);
  }
  return RulesPtr(r);
}

int cmd_check(const std::string& path) {
  const DiagramPtr d = load_diagram(path);
  std::cout << "ok: width=" << rbc_diagram_width(d.get())
            << " gates=" << rbc_diagram_gate_count(d.get()) << '\n';
  return kOk;
}

int cmd_truth(const std::string& path) {
  const DiagramPtr d = load_diagram(path);
  char* text = nullptr;
  check(rbc_truth_table_text(d.get(), max_width_from_env(), &text), path);
  std::cout << take(text);
  return kOk;
}

int cmd_eval(const std::string& path, const std::string& bits) {
  const DiagramPtr d = load_diagram(path);
  char* text = nullptr;
  check(rbc_eval_text(d.get(), bits.c_str(), &text), path);
  std::cout << take(text);
  return kOk;
}

int cmd_measure(const std::string& path) {
  const DiagramPtr d = load_diagram(path);
  char* text = nullptr;
  check(rbc_measure_text(d.get(), &text), path);
  std::cout << "width " << rbc_diagram_width(d.get()) << '\n' << take(text);
  return kOk;
}

int cmd_normalize(const std::string& path, const std::string& rules_path, bool show_trace,
                  bool verify, std::uint64_t max_steps) {
  const DiagramPtr d = load_diagram(path);
  const RulesPtr rules = load_rules(rules_path);
  rbc_diagram* nf_raw = nullptr;
  rbc_trace* trace_raw = nullptr;
  check(rbc_normalize(d.get(), rules.get(), max_steps, &nf_raw, &trace_raw), path);
  const DiagramPtr nf(nf_raw);
  const TracePtr trace(trace_raw);

  char* text = nullptr;
  check(rbc_diagram_to_text(nf.get(), &text), "");
  std::cout << take(text) << "# steps " << rbc_trace_step_count(trace.get()) << '\n';
  if (show_trace) {
    check(rbc_trace_text(trace.get(), &text), "");
    std::cout << take(text);
  }
  if (verify) {
    int ok = 0;
    check(rbc_trace_verify(trace.get(), max_width_from_env(), &ok, &text), "");
    std::cout << take(text);
    if (!ok) return kVerificationFailed;
  }
  return kOk;
}

int cmd_nfs(const std::string& path, const std::string& rules_path, std::size_t max_states) {
  const DiagramPtr d = load_diagram(path);
  const RulesPtr rules = load_rules(rules_path);
  rbc_diagram_list* raw = nullptr;
  check(rbc_normal_forms(d.get(), rules.get(), max_states, &raw), path);
  const ListPtr list(raw);
  const size_t n = rbc_diagram_list_size(list.get());
  for (size_t i = 0; i < n; ++i) {
    char* text = nullptr;
    check(rbc_diagram_to_text(rbc_diagram_list_at(list.get(), i), &text), "");
    std::cout << "# normal form " << i + 1 << '\n' << take(text) << '\n';
  }
  std::cout << "count " << n << '\n';
  return kOk;
}

int cmd_verify_rules(const std::string& rules_path) {
  const RulesPtr rules = load_rules(rules_path);
  int all_strict = 0;
  char* text = nullptr;
  check(rbc_verify_rules(rules.get(), &all_strict, &text), "");
  std::cout << take(text);
  return all_strict ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible circuit rewriting: evaluation, termination measure, normal forms"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string rules_path;
  app.add_option("--rules", rules_path, "Rule catalog replacing the built-in rules")
      ->check(CLI::ExistingFile);

  std::string path;
  std::string bits;
  bool show_trace = false;
  bool verify = false;
  std::uint64_t max_steps = 0;
  std::size_t max_states = 100000;

  auto* check_cmd = app.add_subcommand("check", "Parse and validate a circuit file");
  check_cmd->add_option("file", path, "Circuit file")->required();

  auto* truth_cmd = app.add_subcommand("truth", "Print the truth table");
  truth_cmd->add_option("file", path, "Circuit file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate on one input");
  eval_cmd->add_option("file", path, "Circuit file")->required();
  eval_cmd->add_option("--input", bits, "Input bits, wire 0 first")->required();

  auto* measure_cmd = app.add_subcommand("measure", "Print the move interpretation");
  measure_cmd->add_option("file", path, "Circuit file")->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite to a normal form");
  normalize_cmd->add_option("file", path, "Circuit file")->required();
  normalize_cmd->add_flag("--trace", show_trace, "Print every rewrite step");
  normalize_cmd->add_flag("--verify", verify, "Check semantics and measure for every step");
  normalize_cmd->add_option("--max-steps", max_steps, "Override the safety step cap");

  auto* nfs_cmd = app.add_subcommand("nfs", "Enumerate every reachable normal form");
  nfs_cmd->add_option("file", path, "Circuit file")->required();
  nfs_cmd->add_option("--max-states", max_states, "Give up after this many states")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify-rules", "Check the measure decreases on every rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors count as invalid input; --help exits 0.
    return app.exit(e) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*check_cmd) return cmd_check(path);
    if (*truth_cmd) return cmd_truth(path);
    if (*eval_cmd) return cmd_eval(path, bits);
    if (*measure_cmd) return cmd_measure(path);
    if (*normalize_cmd) return cmd_normalize(path, rules_path, show_trace, verify, max_steps);
    if (*nfs_cmd) return cmd_nfs(path, rules_path, max_states);
    if (*verify_cmd) return cmd_verify_rules(rules_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.message() << '\n';
    return e.exit_code();
  }
  return kFailure;
}
