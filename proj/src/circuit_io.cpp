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

#include "rbc/circuit_io.hpp"

#include <charconv>
#include <sstream>

namespace rbc {
namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::size_t parse_count(const Line& line, const Token& tok) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column, tok.text, "expected a non-negative integer");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() < count) {
    const Token& last = line.tokens.back();
    throw ParseError(line.number, last.column + last.text.size(), "",
                     std::string("missing operand for ") + what);
  }
  if (line.tokens.size() > count) {
    const Token& extra = line.tokens[count];
    throw ParseError(line.number, extra.column, extra.text, "unexpected token");
  }
}

// Parses lines[begin, end) as one circuit.
Diagram parse_lines(const std::vector<Line>& lines, std::size_t begin, std::size_t end,
                    std::size_t eof_line) {
  if (begin == end) throw ParseError(eof_line, 1, "", "missing 'wires <n>' header");
  const Line& header = lines[begin];
  if (header.tokens[0].text != "wires") {
    throw ParseError(header.number, header.tokens[0].column, header.tokens[0].text,
                     "expected 'wires <n>' header");
  }
  expect_arity(header, 2, "wires");
  const std::size_t width = parse_count(header, header.tokens[1]);

  std::vector<Gate> gates;
  for (std::size_t i = begin + 1; i < end; ++i) {
    const Line& line = lines[i];
    const Token& name = line.tokens[0];
    const auto kind = gate_from_name(name.text);
    if (!kind) throw ParseError(line.number, name.column, name.text, "unknown gate");
    expect_arity(line, 2, name.text.c_str());
    const Gate g{*kind, parse_count(line, line.tokens[1])};
    if (g.offset > width || arity(g.kind) > width - g.offset) {
      throw ParseError(line.number, line.tokens[1].column, line.tokens[1].text,
                       "OutOfRange: gate " + std::to_string(gates.size()) + " (" + name.text +
                           ") does not fit in " + std::to_string(width) + " wires",
                       ErrorCode::OutOfRange);
    }
    gates.push_back(g);
  }
  return Diagram(width, std::move(gates));
}

std::size_t last_line(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

Diagram parse_circuit(std::string_view text) {
  const auto lines = tokenize(text);
  return parse_lines(lines, 0, lines.size(), last_line(text));
}

std::string print_circuit(const Diagram& d) {
  std::ostringstream os;
  os << "wires " << d.width() << '\n';
  for (const Gate& g : d.gates()) os << gate_name(g.kind) << ' ' << g.offset << '\n';
  return os.str();
}

std::vector<Rule> parse_rules(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<Rule> rules;
  std::size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.tokens[0].text != "rule") {
      throw ParseError(head.number, head.tokens[0].column, head.tokens[0].text,
                       "expected 'rule <name>'");
    }
    expect_arity(head, 2, "rule");
    const std::size_t lhs_begin = i + 1;
    std::size_t arrow = lhs_begin;
    while (arrow < lines.size() && lines[arrow].tokens[0].text != "=>" &&
           lines[arrow].tokens[0].text != "⇒" && lines[arrow].tokens[0].text != "end") {
      ++arrow;
    }
    if (arrow == lines.size() || lines[arrow].tokens[0].text == "end") {
      const std::size_t at = arrow == lines.size() ? last_line(text) : lines[arrow].number;
      throw ParseError(at, 1, arrow == lines.size() ? "" : "end", "expected '=>' in rule");
    }
    expect_arity(lines[arrow], 1, "=>");
    std::size_t stop = arrow + 1;
    while (stop < lines.size() && lines[stop].tokens[0].text != "end") ++stop;
    if (stop == lines.size()) throw ParseError(last_line(text), 1, "", "expected 'end' in rule");
    expect_arity(lines[stop], 1, "end");

    Rule r;
    r.name = head.tokens[1].text;
    r.lhs = parse_lines(lines, lhs_begin, arrow, lines[arrow].number);
    r.rhs = parse_lines(lines, arrow + 1, stop, lines[stop].number);
    rules.push_back(std::move(r));
    i = stop + 1;
  }
  return rules;
}

std::string print_rules(const std::vector<Rule>& rules) {
  std::string out;
  for (const Rule& r : rules) {
    out += "rule " + r.name + "\n" + print_circuit(r.lhs) + "=>\n" + print_circuit(r.rhs) +
           "end\n";
  }
  return out;
}

std::string describe(const ParseError& e) {
  std::string s = "line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) +
                  ": " + e.what();
  if (!e.token().empty()) s += " '" + e.token() + "'";
  return s;
}

}  // namespace rbc
