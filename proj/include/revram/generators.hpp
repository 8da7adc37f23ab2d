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

#include "revram/netlist.hpp"

#include <string>

namespace revram {

/// Upper bounds for the exhaustive-friendly generator parameters.
struct GeneratorLimits {
  static constexpr unsigned max_decoder_bits = 4;
  static constexpr unsigned max_address_bits = 4;
  static constexpr unsigned max_word_bits = 8;
};

/// n-to-2^n decoder: one FG against a constant one, then 2^(s-1) MFRG1 gates
/// for each further select bit s. Select lines are s0..s{n-1} (s0 is the
/// innermost stage); output y<a> is high exactly for address a. The
/// pass-throughs of s1..s{n-1} are the only garbage.
Netlist build_decoder(unsigned n);

/// Gated D latch: MFRG2(clk, d, q) then FG copies for feedback and q_bar.
/// Next state q_next = clk&d | !clk&q.
Netlist build_dff();

/// Write-enable master-slave D flip-flop.
///
/// MFRG1(w, d, qs) selects the latch input w&d ^ !w&qs, the master MFRG2 is
/// clocked by clk and the slave MFRG2 by the master's inverted clock output.
/// The slave's hold input is the master's Q output, which equals the stored
/// bit while clk is high. The standalone form ends with FG+FG (feedback copy,
/// complement); the for_ram form uses a single DFG for both.
Netlist build_msdff_we(bool for_ram);

enum class RamVariant { PaperFaithful, Functional };
std::string to_string(RamVariant v);
/// "paper" / "functional" (also accepts "paper_faithful").
RamVariant parse_ram_variant(const std::string &text);

struct RamConfig {
  unsigned n = 1; ///< address bits
  unsigned m = 1; ///< word width
  RamVariant variant = RamVariant::PaperFaithful;
};

/// Throws BoundsError when n or m is outside [1, max].
void validate(const RamConfig &config);

/// 2^n x m RAM built from a decoder, per-row Toffoli write enables, data and
/// clock fan-out copies, 2^n*m for_ram flip-flop cells and a read path per
/// column. PaperFaithful reads through one Feynman fan-in gate per column
/// (the parity of every row); Functional reads through a Toffoli per cell
/// controlled by the row select, so the bus carries the selected row.
///
/// Interface lines: s0..s{n-1}, w, clk, d1..dm; outputs q1..qm. Cell (r, c)
/// keeps its bits in state lines qm_r<r>c<c> (master) and qs_r<r>c<c>
/// (slave, the stored bit).
Netlist build_rram(const RamConfig &config);

std::string ram_slave_line(unsigned row, unsigned col);
std::string ram_master_line(unsigned row, unsigned col);

enum class Formula {
  DecoderGates,
  DecoderGarbage,
  DecoderQc,
  RamGates,
  RamGarbage,
  RamQc,
};
std::string to_string(Formula f);
/// Accepts the to_string() spellings, e.g. "decoder_qc"; throws ArgumentError.
Formula parse_formula(const std::string &text);

/// Exact closed-form counts. m is ignored for decoder formulas.
long closed_form(Formula which, unsigned n, unsigned m = 1);

} // namespace revram
