// Copyright 2026 The revram Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revram/netlist_io.hpp"

#include "revram/error.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace revram {

namespace {

template <typename Range, typename Fn>
void join(std::ostringstream &os, const Range &items, Fn fn) {
  bool first = true;
  for (const auto &item : items) {
    if (!first)
      os << ' ';
    first = false;
    os << fn(item);
  }
}

} // namespace

std::string serialize(const Netlist &netlist) {
  std::ostringstream os;
  os << ".version 2.0\n";
  if (!netlist.name().empty())
    os << ".name " << netlist.name() << '\n';
  for (const auto &[key, value] : netlist.params())
    os << ".param " << key << ' ' << value << '\n';
  os << ".numvars " << netlist.line_count() << '\n';

  const auto &lines = netlist.lines();
  const auto &outputs = netlist.outputs();
  auto line_name = [](const Line &l) { return l.name; };
  os << ".variables ";
  join(os, lines, line_name);
  os << "\n.inputs ";
  join(os, lines, line_name);
  os << "\n.outputs ";
  join(os, outputs, [](const Output &o) { return o.name; });

  std::string constants, garbage;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    constants += lines[i].role == LineRole::ConstantZero  ? '0'
                 : lines[i].role == LineRole::ConstantOne ? '1'
                                                          : '-';
    garbage += outputs[i].role == OutputRole::Garbage ? '1' : '-';
  }
  os << "\n.constants " << constants << "\n.garbage " << garbage << '\n';

  std::vector<std::string> pairs;
  for (std::size_t i = 0; i < outputs.size(); ++i)
    if (outputs[i].role == OutputRole::StateNext)
      pairs.push_back(lines[i].name + ">" + lines[*outputs[i].feeds].name);
  if (!pairs.empty()) {
    os << ".feedback ";
    join(os, pairs, [](const std::string &s) { return s; });
    os << '\n';
  }

  os << ".begin\n";
  for (const auto &g : netlist.gates()) {
    os << g.gate->mnemonic();
    for (auto b : g.bindings)
      os << ' ' << lines[b].name;
    os << '\n';
  }
  os << ".end\n";
  return os.str();
}

namespace {

struct Token {
  std::string text;
  std::size_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#')
      break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#')
      ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

class Parser {
public:
  Netlist run(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos)
        eol = text.size();
      ++lineno_;
      handle(tokenize(text.substr(pos, eol - pos)));
      pos = eol + 1;
    }
    if (stage_ != Stage::Done)
      throw ParseError(lineno_, 1, stage_ == Stage::Header
                                       ? "missing .begin"
                                       : "missing .end");
    try {
      netlist_.validate();
    } catch (const ArgumentError &e) {
      throw ParseError(lineno_, 1, e.what());
    }
    return std::move(netlist_);
  }

private:
  enum class Stage { Header, Body, Done };

  [[noreturn]] void fail(const Token &at, const std::string &message) const {
    throw ParseError(lineno_, at.column, message);
  }
  [[noreturn]] void fail(std::size_t column, const std::string &message) const {
    throw ParseError(lineno_, column, message);
  }

  void handle(const std::vector<Token> &tokens) {
    if (tokens.empty())
      return;
    const auto &head = tokens.front();
    switch (stage_) {
    case Stage::Done:
      fail(head, "content after .end");
    case Stage::Body:
      if (head.text == ".end") {
        if (tokens.size() != 1)
          fail(tokens[1], "unexpected token after .end");
        stage_ = Stage::Done;
      } else if (head.text.starts_with(".")) {
        fail(head, "directive '" + head.text + "' inside .begin/.end");
      } else {
        gate(tokens);
      }
      return;
    case Stage::Header:
      directive(tokens);
      return;
    }
  }

  void need_vars(const Token &at) const {
    if (!variables_)
      fail(at, at.text + " must follow .variables");
  }

  void expect_count(const std::vector<Token> &tokens, std::size_t count) const {
    if (tokens.size() - 1 != count)
      fail(tokens.size() > 1 ? tokens.back() : tokens.front(),
           tokens.front().text + " expects " + std::to_string(count) +
               " entries, got " + std::to_string(tokens.size() - 1));
  }

  long parse_int(const Token &t) const {
    long value = 0;
    const auto *end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
      fail(t, "expected an integer, got '" + t.text + "'");
    return value;
  }

  std::string flag_string(const std::vector<Token> &tokens,
                          std::string_view allowed) const {
    need_vars(tokens.front());
    std::string flags;
    if (tokens.size() > 2)
      fail(tokens[2], tokens.front().text + " takes a single string");
    if (tokens.size() == 2)
      flags = tokens[1].text;
    if (flags.size() != *numvars_)
      fail(tokens.size() == 2 ? tokens[1] : tokens[0],
           tokens.front().text + " needs " + std::to_string(*numvars_) +
               " characters, got " + std::to_string(flags.size()));
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (allowed.find(flags[i]) == std::string_view::npos)
        fail(tokens[1].column + i, std::string("invalid character '") +
                                       flags[i] + "' in " + tokens[0].text);
    return flags;
  }

  void directive(const std::vector<Token> &tokens) {
    const auto &head = tokens.front();
    const auto &d = head.text;
    if (!seen_.insert(d).second && d != ".param")
      fail(head, "duplicate directive " + d);

    if (d == ".version") {
      expect_count(tokens, 1);
    } else if (d == ".name") {
      expect_count(tokens, 1);
      netlist_.set_name(tokens[1].text);
    } else if (d == ".param") {
      expect_count(tokens, 2);
      if (netlist_.param(tokens[1].text))
        fail(tokens[1], "duplicate parameter '" + tokens[1].text + "'");
      netlist_.set_param(tokens[1].text, parse_int(tokens[2]));
    } else if (d == ".numvars") {
      expect_count(tokens, 1);
      const auto n = parse_int(tokens[1]);
      if (n < 0)
        fail(tokens[1], ".numvars must be nonnegative");
      numvars_ = static_cast<std::size_t>(n);
    } else if (d == ".variables") {
      if (!numvars_)
        fail(head, ".variables must follow .numvars");
      expect_count(tokens, *numvars_);
      std::set<std::string> names;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!names.insert(tokens[i].text).second)
          fail(tokens[i], "duplicate variable '" + tokens[i].text + "'");
        var_names_.push_back(tokens[i].text);
      }
      variables_ = true;
    } else if (d == ".inputs") {
      need_vars(head);
      expect_count(tokens, *numvars_);
    } else if (d == ".outputs") {
      need_vars(head);
      expect_count(tokens, *numvars_);
      std::set<std::string> names;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!names.insert(tokens[i].text).second)
          fail(tokens[i], "duplicate output '" + tokens[i].text + "'");
        output_names_.push_back(tokens[i].text);
      }
    } else if (d == ".constants") {
      constants_ = flag_string(tokens, "-01");
    } else if (d == ".garbage") {
      garbage_ = flag_string(tokens, "-1");
    } else if (d == ".feedback") {
      need_vars(head);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto &t = tokens[i];
        const auto sep = t.text.find('>');
        if (sep == std::string::npos)
          fail(t, "feedback entry must be <out>><state>, got '" + t.text + "'");
        const auto from = var_index(t.text.substr(0, sep), t);
        const auto to = var_index(t.text.substr(sep + 1), t);
        feedback_.emplace_back(from, to, t);
      }
    } else if (d == ".begin") {
      expect_count(tokens, 0);
      need_vars(head);
      build_lines(head);
      stage_ = Stage::Body;
    } else if (d == ".end") {
      fail(head, ".end without .begin");
    } else {
      fail(head, "unknown directive '" + d + "'");
    }
  }

  std::size_t var_index(const std::string &name, const Token &at) const {
    for (std::size_t i = 0; i < var_names_.size(); ++i)
      if (var_names_[i] == name)
        return i;
    fail(at, "unknown variable '" + name + "'");
  }

  void build_lines(const Token &at) {
    const auto n = *numvars_;
    if (constants_.empty())
      constants_.assign(n, '-');
    if (garbage_.empty())
      garbage_.assign(n, '-');
    if (output_names_.empty())
      output_names_ = var_names_;

    std::vector<bool> is_state(n, false);
    std::vector<std::optional<std::size_t>> feeds(n);
    for (const auto &[from, to, token] : feedback_) {
      if (is_state[to])
        fail(token, "state line '" + var_names_[to] + "' is fed twice");
      if (feeds[from])
        fail(token, "line '" + var_names_[from] + "' already feeds a state");
      if (constants_[to] != '-')
        fail(token, "state line '" + var_names_[to] + "' is a constant");
      if (garbage_[from] == '1')
        fail(token, "garbage line '" + var_names_[from] + "' cannot feed state");
      is_state[to] = true;
      feeds[from] = to;
    }
    (void)at;
    for (std::size_t i = 0; i < n; ++i) {
      LineRole role = LineRole::PrimaryInput;
      if (constants_[i] == '0')
        role = LineRole::ConstantZero;
      else if (constants_[i] == '1')
        role = LineRole::ConstantOne;
      else if (is_state[i])
        role = LineRole::StateFeedback;
      netlist_.add_line(var_names_[i], role);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (feeds[i])
        netlist_.set_output(i, output_names_[i], OutputRole::StateNext,
                            feeds[i]);
      else
        netlist_.set_output(i, output_names_[i],
                            garbage_[i] == '1' ? OutputRole::Garbage
                                               : OutputRole::PrimaryOutput);
    }
  }

  void gate(const std::vector<Token> &tokens) {
    const auto &head = tokens.front();
    GateRef spec;
    try {
      spec = builtin_gate(head.text);
    } catch (const CatalogError &) {
      fail(head, "unknown gate mnemonic '" + head.text + "'");
    }
    if (head.text != spec->mnemonic())
      fail(head, "unknown gate mnemonic '" + head.text + "'");
    if (tokens.size() - 1 != spec->width())
      fail(tokens.size() > 1 ? tokens.back() : head,
           head.text + " takes " + std::to_string(spec->width()) +
               " lines, got " + std::to_string(tokens.size() - 1));
    std::vector<std::size_t> bindings;
    std::set<std::size_t> used;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto idx = var_index(tokens[i].text, tokens[i]);
      if (!used.insert(idx).second)
        fail(tokens[i], "line '" + tokens[i].text + "' bound twice in " +
                            head.text);
      bindings.push_back(idx);
    }
    netlist_.add_gate(spec, std::move(bindings));
  }

  Netlist netlist_;
  Stage stage_ = Stage::Header;
  std::size_t lineno_ = 0;
  std::set<std::string> seen_;
  std::optional<std::size_t> numvars_;
  bool variables_ = false;
  std::vector<std::string> var_names_;
  std::vector<std::string> output_names_;
  std::string constants_;
  std::string garbage_;
  std::vector<std::tuple<std::size_t, std::size_t, Token>> feedback_;
};

} // namespace

Netlist parse(std::string_view text) { return Parser().run(text); }

Netlist load_netlist(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "': file not found or unreadable");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

} // namespace revram
