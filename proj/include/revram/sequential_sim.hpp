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

#include "revram/generators.hpp"
#include "revram/netlist.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revram {

/// Two-phase clocked evaluation of a netlist with registered feedback.
///
/// Each phase evaluates the whole netlist once and then latches every
/// StateNext output into the StateFeedback line it feeds. A cycle is a
/// CLK=1 phase followed by a CLK=0 phase with the other inputs held. State
/// starts at 0.
class ClockedMachine {
public:
  enum class Phase { ClkHigh, ClkLow };

  /// `clock` names the PrimaryInput driven by the machine; a netlist without
  /// such a line is stepped with the clock ignored.
  explicit ClockedMachine(std::shared_ptr<const Netlist> netlist,
                          std::string clock = "clk");

  const Netlist &netlist() const noexcept { return *netlist_; }

  /// Non-clock primary inputs, in line order.
  const std::vector<std::string> &input_names() const noexcept {
    return input_names_;
  }
  /// StateFeedback lines, in line order.
  const std::vector<std::string> &state_names() const noexcept {
    return state_names_;
  }

  /// One evaluation with the clock forced to `clk`. `inputs` must name
  /// exactly the input_names(). Returns the primary outputs.
  Assignment step_phase(bool clk, const Assignment &inputs);
  /// Same with values in input_names() order.
  Assignment step_phase(bool clk, std::span<const std::uint8_t> inputs);

  /// CLK=1 then CLK=0; returns the primary outputs after the second phase.
  Assignment step_cycle(const Assignment &inputs);
  Assignment step_cycle(std::span<const std::uint8_t> inputs);

  /// State bits in state_names() order.
  const BitVector &state() const noexcept { return state_; }
  std::uint8_t state(const std::string &line) const;
  void set_state(const std::string &line, std::uint8_t value);

  /// Phase of the most recent step, if any.
  std::optional<Phase> last_phase() const noexcept { return last_phase_; }

private:
  Assignment run(bool clk, std::span<const std::uint8_t> inputs);
  std::size_t state_slot(const std::string &line) const;

  std::shared_ptr<const Netlist> netlist_;
  std::optional<std::size_t> clock_line_;
  std::vector<std::string> input_names_;
  std::vector<std::string> state_names_;
  // Per free line (free_lines() order): input slot, state slot or clock.
  struct Source {
    enum Kind { Input, State, Clock } kind;
    std::size_t slot;
  };
  std::vector<Source> sources_;
  // (terminal line, state slot) pairs latched after each phase.
  std::vector<std::pair<std::size_t, std::size_t>> latches_;
  std::vector<std::pair<std::size_t, std::string>> primary_;
  BitVector state_;
  std::optional<Phase> last_phase_;
};

/// Ideal 2^n x m memory, zero-initialized.
class RamOracle {
public:
  explicit RamOracle(const RamConfig &config);
  void write(unsigned address, const BitVector &word);
  BitVector read(unsigned address) const;
  const std::vector<BitVector> &words() const noexcept { return words_; }

private:
  RamConfig config_;
  std::vector<BitVector> words_;
};

/// One memory operation. Word bit j is data input d<j+1>.
struct RamOp {
  enum class Kind { Write, Read };
  Kind kind = Kind::Read;
  unsigned address = 0;
  BitVector word; ///< empty for reads

  static RamOp write(unsigned address, BitVector word);
  static RamOp read(unsigned address);
  friend bool operator==(const RamOp &, const RamOp &) = default;
};

using OpScript = std::vector<RamOp>;

/// "1011" -> {1,0,1,1}; throws ArgumentError on other characters.
BitVector parse_word(std::string_view bits);
std::string format_word(const BitVector &word);
/// "w <addr> <bits>" or "r <addr>".
std::string to_string(const RamOp &op);

/// One op per line; `#` starts a comment. Throws ParseError.
OpScript parse_script(std::string_view text);
/// Throws BoundsError when an address or word does not fit the config.
void validate(const OpScript &script, const RamConfig &config);

/// A generated RAM netlist under clock, driven one cycle per operation.
/// Writes set W=1, the address and the data lines; reads set W=0, the
/// address and all data lines to 0.
class RamMachine {
public:
  explicit RamMachine(const RamConfig &config);

  /// Runs one cycle and returns the bus q1..qm after it.
  BitVector execute(const RamOp &op);
  /// Slave bits of every cell, one word per row.
  std::vector<BitVector> stored_words() const;
  /// Every state bit (master and slave) of row r, in state_names() order.
  BitVector row_state(unsigned row) const;
  const ClockedMachine &machine() const noexcept { return machine_; }
  const RamConfig &config() const noexcept { return config_; }

private:
  RamConfig config_;
  ClockedMachine machine_;
  std::vector<std::size_t> address_slots_;
  std::size_t write_slot_ = 0;
  std::vector<std::size_t> data_slots_;
  std::vector<std::size_t> bus_outputs_;
  std::vector<std::vector<std::size_t>> slave_slots_; // [row][col]
  std::vector<std::vector<std::size_t>> row_slots_;   // [row] -> all state slots
  std::vector<std::uint8_t> inputs_;
};

/// Bus values after each read, in script order.
std::vector<BitVector> run_script(const RamConfig &config,
                                  const OpScript &script);

struct Divergence {
  std::size_t script = 0;
  std::size_t op = 0;
  RamOp operation;
  BitVector expected;
  BitVector actual;
};

struct DifferentialReport {
  std::size_t scripts = 0;
  std::size_t operations = 0;
  /// Reads whose bus value differs from the oracle, plus cycles after
  /// which the stored words differ from the oracle's.
  std::size_t divergences = 0;
  /// Reads that changed any state bit.
  std::size_t refresh_violations = 0;
  /// Writes that changed a state bit of another row.
  std::size_t isolation_violations = 0;
  std::optional<Divergence> first;

  bool clean() const noexcept {
    return divergences == 0 && refresh_violations == 0 &&
           isolation_violations == 0;
  }
};

/// Deterministic pseudo-random script (mt19937_64 seeded with `seed`).
OpScript random_script(const RamConfig &config, std::size_t ops,
                       std::uint64_t seed);

/// Runs one script against the netlist and the oracle side by side.
DifferentialReport compare_script(const RamConfig &config,
                                  const OpScript &script);

/// `script_count` random scripts of `ops_per_script` operations. Script i
/// uses a generator seeded from (seed, i).
DifferentialReport differential_test(const RamConfig &config,
                                     std::size_t script_count,
                                     std::size_t ops_per_script,
                                     std::uint64_t seed);

/// Every script of length 1..max_len over all operations of the config,
/// explored depth-first with shared prefixes. Throws BoundsError when the
/// script space exceeds 10^7.
DifferentialReport exhaustive_check(const RamConfig &config,
                                    std::size_t max_len);

} // namespace revram
