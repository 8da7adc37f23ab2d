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

#include "revram/generators.hpp"

#include "revram/error.hpp"

namespace revram {

namespace {

std::string rc(unsigned row, unsigned col) {
  return "_r" + std::to_string(row) + "c" + std::to_string(col);
}

void check_range(const char *what, unsigned value, unsigned max) {
  if (value < 1 || value > max)
    throw BoundsError(std::string(what) + " must be in [1, " +
                      std::to_string(max) + "], got " + std::to_string(value));
}

// Appends an n-to-2^n decoder and returns the line carrying each address's
// one-hot output. Marks the s1..s{n-1} pass-throughs as garbage.
std::vector<std::size_t> add_decoder(Netlist &nl, unsigned n) {
  std::vector<std::size_t> select(n);
  for (unsigned k = 0; k < n; ++k)
    select[k] = nl.add_line("s" + std::to_string(k), LineRole::PrimaryInput);
  const auto one = nl.add_line("one", LineRole::ConstantOne);

  const auto fg = builtin_gate("FG");
  const auto mf1 = builtin_gate("MFRG1");
  nl.add_gate(fg, {select[0], one});
  std::vector<std::size_t> out{one, select[0]}; // !s0, s0

  unsigned zeros = 0;
  for (unsigned s = 1; s < n; ++s) {
    const std::size_t half = std::size_t{1} << s;
    std::vector<std::size_t> next(2 * half);
    for (std::size_t j = 0; j < half; ++j) {
      const auto z =
          nl.add_line("z" + std::to_string(zeros++), LineRole::ConstantZero);
      // (s, x, 0) -> (s, !s&x, s&x)
      nl.add_gate(mf1, {select[s], out[j], z});
      next[j] = out[j];
      next[j + half] = z;
    }
    out = std::move(next);
    nl.set_output(select[s], "g_s" + std::to_string(s), OutputRole::Garbage);
  }
  return out;
}

struct CellLines {
  std::size_t slave;  // stored bit; terminal value is Q
  std::size_t master; // terminal value is the slave's Q output (garbage)
  std::size_t complement;
};

// Appends one write-enable master-slave cell driven by the w, d and clk
// lines. Afterwards w and clk carry their input values again and d carries
// the multiplexer's Q output.
CellLines add_cell(Netlist &nl, std::size_t w, std::size_t d, std::size_t clk,
                   const std::string &suffix, bool for_ram) {
  const auto qs = nl.add_line("qs" + suffix, LineRole::StateFeedback);
  const auto qm = nl.add_line("qm" + suffix, LineRole::StateFeedback);
  const auto cm = nl.add_line("cm" + suffix, LineRole::ConstantZero);
  const auto cs = nl.add_line("cs" + suffix, LineRole::ConstantZero);
  const auto cn = nl.add_line("cn" + suffix, LineRole::ConstantOne);

  const auto mf1 = builtin_gate("MFRG1");
  const auto mf2 = builtin_gate("MFRG2");
  const auto fg = builtin_gate("FG");

  nl.add_gate(mf1, {w, d, qs});   // qs <- w&d ^ !w&qs
  nl.add_gate(mf2, {clk, qs, qm}); // qm <- clk ? data : qm ; qs <- old qm while clk
  nl.add_gate(fg, {qm, cm});
  nl.add_gate(mf2, {clk, qm, qs}); // clk line holds !clk here
  if (for_ram) {
    nl.add_gate(builtin_gate("DFG"), {qs, cs, cn});
  } else {
    nl.add_gate(fg, {qs, cs});
    nl.add_gate(fg, {qs, cn});
  }
  nl.set_output(cm, "qm_next" + suffix, OutputRole::StateNext, qm);
  nl.set_output(cs, "qs_next" + suffix, OutputRole::StateNext, qs);
  return {qs, qm, cn};
}

} // namespace

Netlist build_decoder(unsigned n) {
  check_range("decoder bits", n, GeneratorLimits::max_decoder_bits);
  Netlist nl("decoder");
  nl.set_param("n", n);
  const auto out = add_decoder(nl, n);
  for (std::size_t a = 0; a < out.size(); ++a)
    nl.set_output(out[a], "y" + std::to_string(a), OutputRole::PrimaryOutput);
  return nl;
}

Netlist build_dff() {
  Netlist nl("dff");
  const auto clk = nl.add_line("clk", LineRole::PrimaryInput);
  const auto d = nl.add_line("d", LineRole::PrimaryInput);
  const auto q = nl.add_line("q", LineRole::StateFeedback);
  const auto c0 = nl.add_line("c0", LineRole::ConstantZero);
  const auto c1 = nl.add_line("c1", LineRole::ConstantOne);

  nl.add_gate(builtin_gate("MFRG2"), {clk, d, q});
  nl.add_gate(builtin_gate("FG"), {q, c0});
  nl.add_gate(builtin_gate("FG"), {q, c1});

  nl.set_output(clk, "clk_bar", OutputRole::PrimaryOutput);
  nl.set_output(d, "g_d", OutputRole::Garbage);
  nl.set_output(q, "q", OutputRole::PrimaryOutput);
  nl.set_output(c0, "q_next", OutputRole::StateNext, q);
  nl.set_output(c1, "q_bar", OutputRole::PrimaryOutput);
  return nl;
}

Netlist build_msdff_we(bool for_ram) {
  Netlist nl(for_ram ? "msdff_ram" : "msdff");
  const auto w = nl.add_line("w", LineRole::PrimaryInput);
  const auto d = nl.add_line("d", LineRole::PrimaryInput);
  const auto clk = nl.add_line("clk", LineRole::PrimaryInput);
  const auto cell = add_cell(nl, w, d, clk, "", for_ram);

  nl.set_output(w, "w", OutputRole::PrimaryOutput);
  nl.set_output(d, "g_mux", OutputRole::Garbage);
  nl.set_output(clk, "g_clk", OutputRole::Garbage);
  nl.set_output(cell.master, "g_slave", OutputRole::Garbage);
  nl.set_output(cell.slave, "q", OutputRole::PrimaryOutput);
  nl.set_output(cell.complement, "q_bar", OutputRole::PrimaryOutput);
  return nl;
}

std::string to_string(RamVariant v) {
  return v == RamVariant::Functional ? "functional" : "paper";
}

RamVariant parse_ram_variant(const std::string &text) {
  if (text == "paper" || text == "paper_faithful")
    return RamVariant::PaperFaithful;
  if (text == "functional")
    return RamVariant::Functional;
  throw ArgumentError("unknown RAM variant '" + text +
                      "' (use paper|functional)");
}

void validate(const RamConfig &config) {
  check_range("address bits n", config.n, GeneratorLimits::max_address_bits);
  check_range("word width m", config.m, GeneratorLimits::max_word_bits);
}

std::string ram_slave_line(unsigned row, unsigned col) {
  return "qs" + rc(row, col);
}

std::string ram_master_line(unsigned row, unsigned col) {
  return "qm" + rc(row, col);
}

Netlist build_rram(const RamConfig &config) {
  validate(config);
  const bool paper = config.variant == RamVariant::PaperFaithful;
  const unsigned rows = 1u << config.n;
  const unsigned cols = config.m;
  // Lines the read path leaves unused: outputs in the count-matching form,
  // garbage in the functional variant.
  const auto spare = paper ? OutputRole::PrimaryOutput : OutputRole::Garbage;

  Netlist nl(paper ? "rram_paper" : "rram_functional");
  nl.set_param("n", config.n);
  nl.set_param("m", config.m);

  const auto select = add_decoder(nl, config.n);
  const auto w = nl.add_line("w", LineRole::PrimaryInput);
  const auto clk = nl.add_line("clk", LineRole::PrimaryInput);
  std::vector<std::size_t> data(cols);
  for (unsigned c = 0; c < cols; ++c)
    data[c] = nl.add_line("d" + std::to_string(c + 1), LineRole::PrimaryInput);

  // Row write enables; w is chained through the Toffoli Q outputs.
  const auto tg = builtin_gate("TG");
  std::vector<std::size_t> enable(rows);
  for (unsigned r = 0; r < rows; ++r) {
    enable[r] = nl.add_line("we" + std::to_string(r), LineRole::ConstantZero);
    nl.add_gate(tg, {select[r], w, enable[r]});
  }
  nl.set_output(w, "g_w", OutputRole::Garbage);

  // Copies: each data line reaches every row (the last row takes the
  // original), and each column gets its own clock chain.
  const auto fg = builtin_gate("FG");
  std::vector<std::vector<std::size_t>> cell_data(rows,
                                                  std::vector<std::size_t>(cols));
  for (unsigned c = 0; c < cols; ++c) {
    for (unsigned r = 0; r + 1 < rows; ++r) {
      const auto copy = nl.add_line("d" + std::to_string(c + 1) + "_r" +
                                        std::to_string(r),
                                    LineRole::ConstantZero);
      nl.add_gate(fg, {data[c], copy});
      cell_data[r][c] = copy;
    }
    cell_data[rows - 1][c] = data[c];
  }
  std::vector<std::size_t> column_clock(cols);
  for (unsigned c = 0; c < cols; ++c) {
    column_clock[c] =
        nl.add_line("clk_c" + std::to_string(c), LineRole::ConstantZero);
    nl.add_gate(fg, {clk, column_clock[c]});
  }

  // Cells, row-major: the row enable runs along the row through each
  // multiplexer's P output, the column clock down the column through each
  // slave's P output.
  std::vector<std::vector<std::size_t>> stored(rows,
                                               std::vector<std::size_t>(cols));
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      const auto suffix = rc(r, c);
      const auto cell = add_cell(nl, enable[r], cell_data[r][c],
                                 column_clock[c], suffix, true);
      nl.set_output(cell_data[r][c], "g_mux" + suffix, OutputRole::Garbage);
      nl.set_output(cell.master, "g_slave" + suffix, OutputRole::Garbage);
      nl.set_output(cell.complement, "g_qbar" + suffix, OutputRole::Garbage);
      stored[r][c] = cell.slave;
    }
  }

  for (unsigned c = 0; c < cols; ++c) {
    const auto bus =
        nl.add_line("bus" + std::to_string(c + 1), LineRole::ConstantZero);
    if (paper) {
      std::vector<std::size_t> bindings;
      for (unsigned r = 0; r < rows; ++r)
        bindings.push_back(stored[r][c]);
      bindings.push_back(bus);
      nl.add_gate(feynman_fanin(rows), std::move(bindings));
    } else {
      for (unsigned r = 0; r < rows; ++r)
        nl.add_gate(tg, {select[r], stored[r][c], bus});
    }
    for (unsigned r = 0; r < rows; ++r) {
      // The fan-in gate's first pass-through is the one line the published
      // garbage count leaves out.
      const bool tap = paper && r == 0;
      nl.set_output(stored[r][c],
                    (tap ? "tap" : "g_q") + rc(r, c),
                    tap ? OutputRole::PrimaryOutput : OutputRole::Garbage);
    }
    nl.set_output(bus, "q" + std::to_string(c + 1), OutputRole::PrimaryOutput);
    nl.set_output(column_clock[c], "clk_out" + std::to_string(c),
                  OutputRole::PrimaryOutput);
  }

  for (unsigned r = 0; r < rows; ++r) {
    nl.set_output(select[r], "sel" + std::to_string(r), spare);
    nl.set_output(enable[r], "wen" + std::to_string(r), spare);
  }
  nl.set_output(clk, "clk", OutputRole::PrimaryOutput);
  return nl;
}

std::string to_string(Formula f) {
  switch (f) {
  case Formula::DecoderGates:
    return "decoder_gates";
  case Formula::DecoderGarbage:
    return "decoder_garbage";
  case Formula::DecoderQc:
    return "decoder_qc";
  case Formula::RamGates:
    return "ram_gates";
  case Formula::RamGarbage:
    return "ram_garbage";
  case Formula::RamQc:
    return "ram_qc";
  }
  return "?";
}

Formula parse_formula(const std::string &text) {
  for (auto f : {Formula::DecoderGates, Formula::DecoderGarbage,
                 Formula::DecoderQc, Formula::RamGates, Formula::RamGarbage,
                 Formula::RamQc})
    if (to_string(f) == text)
      return f;
  throw ArgumentError("unknown formula '" + text + "'");
}

long closed_form(Formula which, unsigned n, unsigned m) {
  if (n < 1 || n > 30)
    throw ArgumentError("closed_form: n must be in [1, 30]");
  const long p = 1L << n;
  const long mm = m;
  switch (which) {
  case Formula::DecoderGates:
    return p - 1;
  case Formula::DecoderGarbage:
    return static_cast<long>(n) - 1;
  case Formula::DecoderQc:
    return 4 * p - 7;
  default:
    break;
  }
  if (m < 1)
    throw ArgumentError("closed_form: m must be >= 1");
  switch (which) {
  case Formula::RamGates:
    return p * (6 * mm + 2) + mm - 1;
  case Formula::RamGarbage:
    return mm * (4 * p - 1) + n;
  case Formula::RamQc:
    return p * (19 * mm + 9) - 7;
  default:
    break;
  }
  throw ArgumentError("unknown formula");
}

} // namespace revram
