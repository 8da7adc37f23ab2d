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

#include "revram/netlist.hpp"

#include "revram/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace revram {

std::string to_string(LineRole role) {
  switch (role) {
  case LineRole::PrimaryInput:
    return "primary_input";
  case LineRole::ConstantZero:
    return "constant_zero";
  case LineRole::ConstantOne:
    return "constant_one";
  case LineRole::StateFeedback:
    return "state_feedback";
  }
  return "?";
}

std::string to_string(OutputRole role) {
  switch (role) {
  case OutputRole::PrimaryOutput:
    return "primary_output";
  case OutputRole::Garbage:
    return "garbage";
  case OutputRole::StateNext:
    return "state_next";
  }
  return "?";
}

std::size_t Netlist::add_line(std::string name, LineRole role) {
  const auto index = lines_.size();
  outputs_.push_back({name, OutputRole::PrimaryOutput, std::nullopt});
  lines_.push_back({index, std::move(name), role});
  return index;
}

void Netlist::add_gate(GateRef gate, std::vector<std::size_t> bindings) {
  if (!gate)
    throw ArgumentError("null gate");
  if (bindings.size() != gate->width())
    throw ArgumentError("gate " + gate->name() + " needs " +
                        std::to_string(gate->width()) + " lines, got " +
                        std::to_string(bindings.size()));
  std::set<std::size_t> seen;
  for (auto b : bindings) {
    if (b >= lines_.size())
      throw ArgumentError("gate " + gate->name() + " bound to unknown line " +
                          std::to_string(b));
    if (!seen.insert(b).second)
      throw ArgumentError("gate " + gate->name() + " binds line '" +
                          lines_[b].name + "' twice");
  }
  gates_.push_back({std::move(gate), std::move(bindings)});
}

void Netlist::set_output(std::size_t line, std::string name, OutputRole role,
                         std::optional<std::size_t> feeds) {
  if (line >= outputs_.size())
    throw ArgumentError("set_output: unknown line " + std::to_string(line));
  if ((role == OutputRole::StateNext) != feeds.has_value())
    throw ArgumentError("set_output: state_next outputs (and only they) "
                        "name a feedback line");
  outputs_[line] = {std::move(name), role, feeds};
}

std::optional<long> Netlist::param(const std::string &key) const {
  if (auto it = params_.find(key); it != params_.end())
    return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Netlist::find_line(const std::string &name) const {
  for (const auto &l : lines_)
    if (l.name == name)
      return l.index;
  return std::nullopt;
}

std::size_t Netlist::line_index(const std::string &name) const {
  if (auto i = find_line(name))
    return *i;
  throw ArgumentError("no line named '" + name + "'");
}

std::optional<std::size_t> Netlist::find_output(const std::string &name) const {
  for (std::size_t i = 0; i < outputs_.size(); ++i)
    if (outputs_[i].name == name)
      return i;
  return std::nullopt;
}

std::size_t Netlist::output_index(const std::string &name) const {
  if (auto i = find_output(name))
    return *i;
  throw ArgumentError("no output named '" + name + "'");
}

std::vector<std::size_t> Netlist::free_lines() const {
  std::vector<std::size_t> out;
  for (const auto &l : lines_)
    if (l.role == LineRole::PrimaryInput || l.role == LineRole::StateFeedback)
      out.push_back(l.index);
  return out;
}

void Netlist::validate() const {
  std::set<std::string> names;
  for (const auto &l : lines_)
    if (!names.insert(l.name).second)
      throw ArgumentError("duplicate line name '" + l.name + "'");
  names.clear();
  for (const auto &o : outputs_)
    if (!names.insert(o.name).second)
      throw ArgumentError("duplicate output name '" + o.name + "'");

  std::size_t feedback_lines = 0;
  for (const auto &l : lines_)
    feedback_lines += l.role == LineRole::StateFeedback;
  std::vector<int> fed(lines_.size(), 0);
  std::size_t next_outputs = 0;
  for (const auto &o : outputs_) {
    if (o.role != OutputRole::StateNext)
      continue;
    ++next_outputs;
    if (!o.feeds || *o.feeds >= lines_.size() ||
        lines_[*o.feeds].role != LineRole::StateFeedback)
      throw ArgumentError("state_next output '" + o.name +
                          "' must feed a state_feedback line");
    if (++fed[*o.feeds] > 1)
      throw ArgumentError("state line '" + lines_[*o.feeds].name +
                          "' is fed twice");
  }
  if (next_outputs != feedback_lines)
    throw ArgumentError(std::to_string(feedback_lines) +
                        " state_feedback lines but " +
                        std::to_string(next_outputs) + " state_next outputs");

  for (const auto &g : gates_) {
    if (g.bindings.size() != g.gate->width())
      throw ArgumentError("gate " + g.gate->name() + " arity mismatch");
    std::set<std::size_t> seen(g.bindings.begin(), g.bindings.end());
    if (seen.size() != g.bindings.size() ||
        (!seen.empty() && *seen.rbegin() >= lines_.size()))
      throw ArgumentError("gate " + g.gate->name() + " has invalid bindings");
  }
}

namespace {

void run_gates(const Netlist &netlist, BitVector &values) {
  for (const auto &g : netlist.gates()) {
    std::uint32_t pattern = 0;
    for (auto b : g.bindings)
      pattern = (pattern << 1) | values[b];
    auto out = g.gate->apply(pattern);
    for (auto it = g.bindings.rbegin(); it != g.bindings.rend(); ++it) {
      values[*it] = out & 1u;
      out >>= 1;
    }
  }
}

} // namespace

BitVector evaluate_free(const Netlist &netlist,
                        std::span<const std::uint8_t> free_values) {
  BitVector values(netlist.line_count(), 0);
  std::size_t next = 0;
  for (const auto &l : netlist.lines()) {
    switch (l.role) {
    case LineRole::ConstantZero:
      break;
    case LineRole::ConstantOne:
      values[l.index] = 1;
      break;
    case LineRole::PrimaryInput:
    case LineRole::StateFeedback:
      if (next >= free_values.size())
        throw ArgumentError("too few free-line values");
      values[l.index] = free_values[next++] & 1u;
      break;
    }
  }
  if (next != free_values.size())
    throw ArgumentError("too many free-line values");
  run_gates(netlist, values);
  return values;
}

BitVector evaluate(const Netlist &netlist, const Assignment &inputs) {
  BitVector free_values;
  std::size_t used = 0;
  for (auto index : netlist.free_lines()) {
    const auto &name = netlist.lines()[index].name;
    auto it = inputs.find(name);
    if (it == inputs.end())
      throw ArgumentError("missing value for line '" + name + "'");
    if (it->second > 1)
      throw ArgumentError("value for line '" + name + "' is not a bit");
    free_values.push_back(it->second);
    ++used;
  }
  if (used != inputs.size()) {
    for (const auto &[name, _] : inputs) {
      auto idx = netlist.find_line(name);
      if (!idx)
        throw ArgumentError("assignment names unknown line '" + name + "'");
      const auto role = netlist.lines()[*idx].role;
      if (role != LineRole::PrimaryInput && role != LineRole::StateFeedback)
        throw ArgumentError("line '" + name + "' is a constant");
    }
  }
  return evaluate_free(netlist, free_values);
}

Partition partition(const Netlist &netlist,
                    std::span<const std::uint8_t> terminal) {
  if (terminal.size() != netlist.line_count())
    throw ArgumentError("terminal vector length mismatch");
  Partition p;
  for (std::size_t i = 0; i < terminal.size(); ++i) {
    const auto &o = netlist.outputs()[i];
    switch (o.role) {
    case OutputRole::PrimaryOutput:
      p.primary[o.name] = terminal[i];
      break;
    case OutputRole::Garbage:
      p.garbage[o.name] = terminal[i];
      break;
    case OutputRole::StateNext:
      p.state_next[o.name] = terminal[i];
      break;
    }
  }
  return p;
}

ReversibilityReport check_reversibility(const Netlist &netlist) {
  const auto free = netlist.free_lines();
  if (free.size() > kMaxExhaustiveFreeLines)
    throw BoundsError("exhaustive reversibility check is limited to " +
                      std::to_string(kMaxExhaustiveFreeLines) +
                      " free lines; netlist has " +
                      std::to_string(free.size()));
  ReversibilityReport report;
  report.free_lines = free.size();

  const std::size_t patterns = std::size_t{1} << free.size();
  const std::size_t stride = (netlist.line_count() + 63) / 64;
  std::vector<std::uint64_t> packed(patterns * std::max<std::size_t>(stride, 1));
  BitVector inputs(free.size());
  for (std::size_t p = 0; p < patterns; ++p) {
    for (std::size_t i = 0; i < free.size(); ++i)
      inputs[i] = (p >> (free.size() - 1 - i)) & 1u;
    const auto terminal = evaluate_free(netlist, inputs);
    auto *row = &packed[p * stride];
    for (std::size_t i = 0; i < terminal.size(); ++i)
      if (terminal[i])
        row[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  report.evaluated = patterns;

  std::vector<std::size_t> order(patterns);
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        packed.begin() + a * stride, packed.begin() + (a + 1) * stride,
        packed.begin() + b * stride, packed.begin() + (b + 1) * stride);
  };
  std::sort(order.begin(), order.end(), row_less);
  report.reversible = true;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!row_less(order[i - 1], order[i])) {
      report.reversible = false;
      report.collision = {std::min(order[i - 1], order[i]),
                          std::max(order[i - 1], order[i])};
      break;
    }
  }
  return report;
}

} // namespace revram
