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

#include "revram/sequential_sim.hpp"

#include "revram/error.hpp"

#include <array>
#include <cctype>
#include <random>
#include <sstream>
#include <unordered_map>

namespace revram {

ClockedMachine::ClockedMachine(std::shared_ptr<const Netlist> netlist,
                               std::string clock)
    : netlist_(std::move(netlist)) {
  if (!netlist_)
    throw ArgumentError("ClockedMachine needs a netlist");
  netlist_->validate();
  std::unordered_map<std::size_t, std::size_t> state_slot_of_line;
  for (auto index : netlist_->free_lines()) {
    const auto &line = netlist_->lines()[index];
    if (line.role == LineRole::StateFeedback) {
      state_slot_of_line[index] = state_names_.size();
      sources_.push_back({Source::State, state_names_.size()});
      state_names_.push_back(line.name);
    } else if (line.name == clock) {
      clock_line_ = index;
      sources_.push_back({Source::Clock, 0});
    } else {
      sources_.push_back({Source::Input, input_names_.size()});
      input_names_.push_back(line.name);
    }
  }
  const auto &outputs = netlist_->outputs();
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (outputs[i].role == OutputRole::StateNext)
      latches_.emplace_back(i, state_slot_of_line.at(*outputs[i].feeds));
    else if (outputs[i].role == OutputRole::PrimaryOutput)
      primary_.emplace_back(i, outputs[i].name);
  }
  state_.assign(state_names_.size(), 0);
}

Assignment ClockedMachine::run(bool clk, std::span<const std::uint8_t> inputs) {
  if (inputs.size() != input_names_.size())
    throw ArgumentError("expected " + std::to_string(input_names_.size()) +
                        " input values, got " + std::to_string(inputs.size()));
  BitVector free(sources_.size());
  for (std::size_t i = 0; i < sources_.size(); ++i) {
    switch (sources_[i].kind) {
    case Source::Input:
      free[i] = inputs[sources_[i].slot] & 1u;
      break;
    case Source::State:
      free[i] = state_[sources_[i].slot];
      break;
    case Source::Clock:
      free[i] = clk ? 1 : 0;
      break;
    }
  }
  const auto terminal = evaluate_free(*netlist_, free);
  for (auto [line, slot] : latches_)
    state_[slot] = terminal[line];
  last_phase_ = clk ? Phase::ClkHigh : Phase::ClkLow;
  Assignment out;
  for (const auto &[line, name] : primary_)
    out[name] = terminal[line];
  return out;
}

Assignment ClockedMachine::step_phase(bool clk,
                                      std::span<const std::uint8_t> inputs) {
  return run(clk, inputs);
}

Assignment ClockedMachine::step_phase(bool clk, const Assignment &inputs) {
  BitVector values;
  values.reserve(input_names_.size());
  for (const auto &name : input_names_) {
    auto it = inputs.find(name);
    if (it == inputs.end())
      throw ArgumentError("missing value for input '" + name + "'");
    if (it->second > 1)
      throw ArgumentError("value for input '" + name + "' is not a bit");
    values.push_back(it->second);
  }
  if (values.size() != inputs.size()) {
    for (const auto &[name, _] : inputs) {
      bool known = false;
      for (const auto &n : input_names_)
        known = known || n == name;
      if (!known)
        throw ArgumentError("'" + name + "' is not a non-clock primary input");
    }
  }
  return run(clk, values);
}

Assignment ClockedMachine::step_cycle(const Assignment &inputs) {
  step_phase(true, inputs);
  return step_phase(false, inputs);
}

Assignment ClockedMachine::step_cycle(std::span<const std::uint8_t> inputs) {
  run(true, inputs);
  return run(false, inputs);
}

std::size_t ClockedMachine::state_slot(const std::string &line) const {
  for (std::size_t i = 0; i < state_names_.size(); ++i)
    if (state_names_[i] == line)
      return i;
  throw ArgumentError("'" + line + "' is not a state line");
}

std::uint8_t ClockedMachine::state(const std::string &line) const {
  return state_[state_slot(line)];
}

void ClockedMachine::set_state(const std::string &line, std::uint8_t value) {
  if (value > 1)
    throw ArgumentError("state value is not a bit");
  state_[state_slot(line)] = value;
}

RamOracle::RamOracle(const RamConfig &config)
    : config_(config),
      words_(std::size_t{1} << config.n, BitVector(config.m, 0)) {
  validate(config);
}

void RamOracle::write(unsigned address, const BitVector &word) {
  if (address >= words_.size() || word.size() != config_.m)
    throw BoundsError("oracle write out of range");
  words_[address] = word;
}

BitVector RamOracle::read(unsigned address) const {
  if (address >= words_.size())
    throw BoundsError("oracle read out of range");
  return words_[address];
}

RamOp RamOp::write(unsigned address, BitVector word) {
  return {Kind::Write, address, std::move(word)};
}

RamOp RamOp::read(unsigned address) { return {Kind::Read, address, {}}; }

BitVector parse_word(std::string_view bits) {
  BitVector word;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw ArgumentError("word '" + std::string(bits) +
                          "' must contain only 0 and 1");
    word.push_back(c == '1');
  }
  if (word.empty())
    throw ArgumentError("empty word");
  return word;
}

std::string format_word(const BitVector &word) {
  std::string s;
  for (auto b : word)
    s.push_back(b ? '1' : '0');
  return s;
}

std::string to_string(const RamOp &op) {
  if (op.kind == RamOp::Kind::Read)
    return "r " + std::to_string(op.address);
  return "w " + std::to_string(op.address) + " " + format_word(op.word);
}

OpScript parse_script(std::string_view text) {
  OpScript script;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<std::pair<std::size_t, std::string>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      tokens.emplace_back(i + 1, std::string(line.substr(i, j - i)));
      i = j;
    }
    if (tokens.empty())
      continue;

    const auto &[col, verb] = tokens[0];
    const bool is_write = verb == "w";
    if (!is_write && verb != "r")
      throw ParseError(line_no, col, "unknown operation '" + verb + "' (use w|r)");
    const std::size_t want = is_write ? 3 : 2;
    if (tokens.size() != want)
      throw ParseError(line_no, col,
                       is_write ? "expected 'w <addr> <bits>'"
                                : "expected 'r <addr>'");
    unsigned long address = 0;
    try {
      std::size_t used = 0;
      address = std::stoul(tokens[1].second, &used);
      if (used != tokens[1].second.size())
        throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw ParseError(line_no, tokens[1].first,
                       "bad address '" + tokens[1].second + "'");
    }
    if (address > 0xffffffffUL)
      throw ParseError(line_no, tokens[1].first, "address too large");
    if (is_write) {
      try {
        script.push_back(RamOp::write(static_cast<unsigned>(address),
                                      parse_word(tokens[2].second)));
      } catch (const ArgumentError &e) {
        throw ParseError(line_no, tokens[2].first, e.what());
      }
    } else {
      script.push_back(RamOp::read(static_cast<unsigned>(address)));
    }
  }
  return script;
}

void validate(const OpScript &script, const RamConfig &config) {
  validate(config);
  const std::size_t rows = std::size_t{1} << config.n;
  for (std::size_t i = 0; i < script.size(); ++i) {
    const auto &op = script[i];
    if (op.address >= rows)
      throw BoundsError("op " + std::to_string(i + 1) + ": address " +
                        std::to_string(op.address) + " >= " +
                        std::to_string(rows));
    if (op.kind == RamOp::Kind::Write && op.word.size() != config.m)
      throw BoundsError("op " + std::to_string(i + 1) + ": word has " +
                        std::to_string(op.word.size()) + " bits, expected " +
                        std::to_string(config.m));
    if (op.kind == RamOp::Kind::Read && !op.word.empty())
      throw BoundsError("op " + std::to_string(i + 1) + ": read carries a word");
  }
}

namespace {

std::size_t slot_of(const std::vector<std::string> &names,
                    const std::string &name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return i;
  throw ArgumentError("RAM netlist lacks line '" + name + "'");
}

} // namespace

RamMachine::RamMachine(const RamConfig &config)
    : config_(config),
      machine_(std::make_shared<const Netlist>(build_rram(config))) {
  const auto &inputs = machine_.input_names();
  for (unsigned k = 0; k < config.n; ++k)
    address_slots_.push_back(slot_of(inputs, "s" + std::to_string(k)));
  write_slot_ = slot_of(inputs, "w");
  for (unsigned c = 0; c < config.m; ++c)
    data_slots_.push_back(slot_of(inputs, "d" + std::to_string(c + 1)));
  inputs_.assign(inputs.size(), 0);

  const auto &nl = machine_.netlist();
  for (unsigned c = 0; c < config.m; ++c)
    bus_outputs_.push_back(nl.output_index("q" + std::to_string(c + 1)));

  const auto &states = machine_.state_names();
  const unsigned rows = 1u << config.n;
  slave_slots_.resize(rows);
  row_slots_.resize(rows);
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < config.m; ++c) {
      const auto slave = slot_of(states, ram_slave_line(r, c));
      const auto master = slot_of(states, ram_master_line(r, c));
      slave_slots_[r].push_back(slave);
      row_slots_[r].push_back(master);
      row_slots_[r].push_back(slave);
    }
  }
}

BitVector RamMachine::execute(const RamOp &op) {
  const bool write = op.kind == RamOp::Kind::Write;
  if (op.address >= slave_slots_.size() ||
      (write && op.word.size() != config_.m))
    throw BoundsError("operation '" + to_string(op) + "' does not fit the RAM");
  for (std::size_t k = 0; k < address_slots_.size(); ++k)
    inputs_[address_slots_[k]] = (op.address >> k) & 1u;
  inputs_[write_slot_] = write ? 1 : 0;
  for (std::size_t c = 0; c < data_slots_.size(); ++c)
    inputs_[data_slots_[c]] = write ? op.word[c] : 0;

  const auto outputs = machine_.step_cycle(inputs_);
  const auto &nl = machine_.netlist();
  BitVector bus;
  for (auto index : bus_outputs_)
    bus.push_back(outputs.at(nl.outputs()[index].name));
  return bus;
}

std::vector<BitVector> RamMachine::stored_words() const {
  std::vector<BitVector> words;
  for (const auto &row : slave_slots_) {
    BitVector word;
    for (auto slot : row)
      word.push_back(machine_.state()[slot]);
    words.push_back(std::move(word));
  }
  return words;
}

BitVector RamMachine::row_state(unsigned row) const {
  BitVector bits;
  for (auto slot : row_slots_.at(row))
    bits.push_back(machine_.state()[slot]);
  return bits;
}

std::vector<BitVector> run_script(const RamConfig &config,
                                  const OpScript &script) {
  validate(script, config);
  RamMachine machine(config);
  std::vector<BitVector> reads;
  for (const auto &op : script) {
    auto bus = machine.execute(op);
    if (op.kind == RamOp::Kind::Read)
      reads.push_back(std::move(bus));
  }
  return reads;
}

namespace {

void note(DifferentialReport &report, std::size_t script, std::size_t op,
          const RamOp &operation, BitVector expected, BitVector actual) {
  ++report.divergences;
  if (!report.first)
    report.first = Divergence{script, op, operation, std::move(expected),
                              std::move(actual)};
}

// Executes one op on both models and records every check.
void step_both(RamMachine &machine, RamOracle &oracle, const RamOp &op,
               std::size_t script, std::size_t index,
               DifferentialReport &report) {
  const auto before = machine.machine().state();
  std::vector<BitVector> rows_before;
  const unsigned rows = 1u << machine.config().n;
  for (unsigned r = 0; r < rows; ++r)
    rows_before.push_back(machine.row_state(r));

  const auto bus = machine.execute(op);
  ++report.operations;

  if (op.kind == RamOp::Kind::Read) {
    auto expected = oracle.read(op.address);
    if (bus != expected)
      note(report, script, index, op, std::move(expected), bus);
    if (machine.machine().state() != before)
      ++report.refresh_violations;
  } else {
    oracle.write(op.address, op.word);
    for (unsigned r = 0; r < rows; ++r)
      if (r != op.address && machine.row_state(r) != rows_before[r]) {
        ++report.isolation_violations;
        break;
      }
  }

  const auto stored = machine.stored_words();
  for (unsigned r = 0; r < rows; ++r)
    if (stored[r] != oracle.words()[r]) {
      note(report, script, index, op, oracle.words()[r], stored[r]);
      break;
    }
}

} // namespace

OpScript random_script(const RamConfig &config, std::size_t ops,
                       std::uint64_t seed) {
  validate(config);
  std::mt19937_64 rng(seed);
  const std::uint64_t rows = std::uint64_t{1} << config.n;
  OpScript script;
  script.reserve(ops);
  for (std::size_t i = 0; i < ops; ++i) {
    const bool write = rng() & 1u;
    const auto address = static_cast<unsigned>(rng() % rows);
    if (write) {
      BitVector word(config.m);
      for (auto &b : word)
        b = rng() & 1u;
      script.push_back(RamOp::write(address, std::move(word)));
    } else {
      script.push_back(RamOp::read(address));
    }
  }
  return script;
}

DifferentialReport compare_script(const RamConfig &config,
                                  const OpScript &script) {
  validate(script, config);
  RamMachine machine(config);
  RamOracle oracle(config);
  DifferentialReport report;
  report.scripts = 1;
  for (std::size_t i = 0; i < script.size(); ++i)
    step_both(machine, oracle, script[i], 0, i, report);
  return report;
}

DifferentialReport differential_test(const RamConfig &config,
                                     std::size_t script_count,
                                     std::size_t ops_per_script,
                                     std::uint64_t seed) {
  validate(config);
  DifferentialReport report;
  const RamMachine fresh(config);
  for (std::size_t s = 0; s < script_count; ++s) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(s),
                      static_cast<std::uint32_t>(s >> 32)};
    std::uint64_t script_seed = 0;
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    script_seed = (std::uint64_t{words[0]} << 32) | words[1];
    const auto script = random_script(config, ops_per_script, script_seed);

    RamMachine machine = fresh;
    RamOracle oracle(config);
    for (std::size_t i = 0; i < script.size(); ++i)
      step_both(machine, oracle, script[i], s, i, report);
    ++report.scripts;
  }
  return report;
}

namespace {

void explore(const RamMachine &machine, const RamOracle &oracle,
             const std::vector<RamOp> &alphabet, std::size_t depth,
             std::size_t max_len, DifferentialReport &report) {
  for (const auto &op : alphabet) {
    RamMachine next_machine = machine;
    RamOracle next_oracle = oracle;
    const auto before = report.divergences;
    step_both(next_machine, next_oracle, op, report.scripts, depth, report);
    ++report.scripts;
    // Descendants would repeat an already recorded divergence.
    if (depth + 1 < max_len && report.divergences == before)
      explore(next_machine, next_oracle, alphabet, depth + 1, max_len, report);
  }
}

} // namespace

DifferentialReport exhaustive_check(const RamConfig &config,
                                    std::size_t max_len) {
  validate(config);
  std::vector<RamOp> alphabet;
  const unsigned rows = 1u << config.n;
  for (unsigned a = 0; a < rows; ++a) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << config.m); ++bits) {
      BitVector word(config.m);
      for (unsigned c = 0; c < config.m; ++c)
        word[c] = (bits >> (config.m - 1 - c)) & 1u;
      alphabet.push_back(RamOp::write(a, std::move(word)));
    }
    alphabet.push_back(RamOp::read(a));
  }
  double total = 0;
  double layer = 1;
  for (std::size_t l = 0; l < max_len; ++l) {
    layer *= static_cast<double>(alphabet.size());
    total += layer;
  }
  if (total > 1e7)
    throw BoundsError("exhaustive script space too large (" +
                      std::to_string(static_cast<long long>(total)) +
                      " scripts)");
  DifferentialReport report;
  if (max_len == 0)
    return report;
  explore(RamMachine(config), RamOracle(config), alphabet, 0, max_len, report);
  return report;
}

} // namespace revram
