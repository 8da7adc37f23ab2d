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

#pragma once

#include "revram/gate_library.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace revram {

enum class LineRole { PrimaryInput, ConstantZero, ConstantOne, StateFeedback };
enum class OutputRole { PrimaryOutput, Garbage, StateNext };

std::string to_string(LineRole role);
std::string to_string(OutputRole role);

struct Line {
  std::size_t index = 0;
  std::string name;
  LineRole role = LineRole::PrimaryInput;

  friend bool operator==(const Line &, const Line &) = default;
};

/// Classification of a line's terminal value.
struct Output {
  std::string name;
  OutputRole role = OutputRole::PrimaryOutput;
  /// For StateNext: the StateFeedback line this value is latched into.
  std::optional<std::size_t> feeds;

  friend bool operator==(const Output &, const Output &) = default;
};

struct GateInstance {
  GateRef gate;
  std::vector<std::size_t> bindings;

  friend bool operator==(const GateInstance &a, const GateInstance &b) {
    return a.gate->name() == b.gate->name() &&
           a.gate->width() == b.gate->width() && a.bindings == b.bindings;
  }
};

/// A reversible circuit: a fixed set of lines, gates applied in order, and a
/// role for the terminal value of every line.
///
/// Built incrementally by generators or the parser, then treated as a value.
/// Each line has exactly one Output entry; add_line() defaults it to a
/// primary output carrying the line's name.
class Netlist {
public:
  explicit Netlist(std::string name = {}) : name_(std::move(name)) {}

  std::size_t add_line(std::string name, LineRole role);
  /// Throws ArgumentError on width mismatch, unknown or repeated lines.
  void add_gate(GateRef gate, std::vector<std::size_t> bindings);
  void set_output(std::size_t line, std::string name, OutputRole role,
                  std::optional<std::size_t> feeds = std::nullopt);

  void set_param(const std::string &key, long value) { params_[key] = value; }
  std::optional<long> param(const std::string &key) const;
  const std::map<std::string, long> &params() const noexcept { return params_; }

  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Line> &lines() const noexcept { return lines_; }
  const std::vector<Output> &outputs() const noexcept { return outputs_; }
  const std::vector<GateInstance> &gates() const noexcept { return gates_; }

  std::size_t line_count() const noexcept { return lines_.size(); }
  std::optional<std::size_t> find_line(const std::string &name) const;
  std::size_t line_index(const std::string &name) const;
  std::optional<std::size_t> find_output(const std::string &name) const;
  std::size_t output_index(const std::string &name) const;

  /// PrimaryInput and StateFeedback lines, in line order.
  std::vector<std::size_t> free_lines() const;

  /// Checks every structural invariant; throws ArgumentError naming the first
  /// violation.
  void validate() const;

  friend bool operator==(const Netlist &, const Netlist &) = default;

private:
  std::string name_;
  std::map<std::string, long> params_;
  std::vector<Line> lines_;
  std::vector<Output> outputs_;
  std::vector<GateInstance> gates_;
};

/// Values keyed by line name (inputs) or output name (results).
using Assignment = std::map<std::string, std::uint8_t>;

/// Runs every gate in order from the given free-line values (free_lines()
/// order); constants take their fixed values. Returns the terminal value of
/// every line, indexed by line.
BitVector evaluate_free(const Netlist &netlist,
                        std::span<const std::uint8_t> free_values);

/// Same, keyed by line name. The assignment must cover exactly the
/// PrimaryInput and StateFeedback lines.
BitVector evaluate(const Netlist &netlist, const Assignment &inputs);

/// Terminal values grouped by output role, keyed by output name.
struct Partition {
  Assignment primary;
  Assignment garbage;
  Assignment state_next;
};
Partition partition(const Netlist &netlist, std::span<const std::uint8_t> terminal);

struct ReversibilityReport {
  bool reversible = false;
  std::size_t free_lines = 0;
  std::size_t evaluated = 0;
  /// Two free-input patterns (free_lines() order, first = MSB) with equal
  /// terminal vectors.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;
};

inline constexpr std::size_t kMaxExhaustiveFreeLines = 22;

/// Exhaustively evaluates all free-line assignments and checks the terminal
/// vectors are pairwise distinct. Throws BoundsError above
/// kMaxExhaustiveFreeLines free lines.
ReversibilityReport check_reversibility(const Netlist &netlist);

} // namespace revram
