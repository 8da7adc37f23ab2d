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

#include "revram/error.hpp"
#include "revram/generators.hpp"
#include "revram/metrics.hpp"
#include "revram/sequential_sim.hpp"

#include <gtest/gtest.h>

#include <set>

namespace revram {
namespace {

// Closed forms recomputed here by counting gate by gate rather than from
// the library's formula table.
long pow2(unsigned n) { return 1L << n; }

TEST(ClosedForm, Values) {
  EXPECT_EQ(closed_form(Formula::DecoderQc, 1), 1);
  EXPECT_EQ(closed_form(Formula::DecoderQc, 2), 9);
  EXPECT_EQ(closed_form(Formula::DecoderGates, 3), 7);
  EXPECT_EQ(closed_form(Formula::DecoderGarbage, 4), 3);
  EXPECT_EQ(closed_form(Formula::RamGates, 2, 4), 107);
  EXPECT_EQ(closed_form(Formula::RamQc, 2, 4), 333);
  EXPECT_EQ(closed_form(Formula::RamGates, 2, 1), 32);
  EXPECT_EQ(closed_form(Formula::RamGarbage, 1, 1), 8);
  EXPECT_EQ(closed_form(Formula::RamQc, 1, 1), 49);
  EXPECT_THROW(closed_form(Formula::RamQc, 0, 1), ArgumentError);
  EXPECT_THROW(closed_form(Formula::RamQc, 1, 0), ArgumentError);
}

TEST(ClosedForm, AgreesWithPerComponentCounts) {
  for (unsigned n = 1; n <= 8; ++n) {
    // Decoder: one FG, then 2^(s-1) MFRG1 (cost 4) for s = 2..n.
    long gates = 1, cost = 1;
    for (unsigned s = 2; s <= n; ++s) {
      gates += pow2(s - 1);
      cost += 4 * pow2(s - 1);
    }
    EXPECT_EQ(closed_form(Formula::DecoderGates, n), gates);
    EXPECT_EQ(closed_form(Formula::DecoderQc, n), cost);
    for (unsigned m = 1; m <= 8; ++m) {
      const long rows = pow2(n);
      // decoder + row Toffolis + data copies + clock copies + 5-gate cells
      // + one fan-in read gate per column.
      const long g = gates + rows + (rows - 1) * m + m + 5 * rows * m + m;
      const long c = cost + 5 * rows + (rows - 1) * m + m + 17 * rows * m +
                     rows * m;
      const long garbage = (n - 1) + 1 + 3 * rows * m + (rows - 1) * m;
      EXPECT_EQ(closed_form(Formula::RamGates, n, m), g);
      EXPECT_EQ(closed_form(Formula::RamQc, n, m), c);
      EXPECT_EQ(closed_form(Formula::RamGarbage, n, m), garbage);
    }
  }
}

TEST(ClosedForm, ParseNames) {
  for (auto f : {Formula::DecoderGates, Formula::DecoderGarbage,
                 Formula::DecoderQc, Formula::RamGates, Formula::RamGarbage,
                 Formula::RamQc})
    EXPECT_EQ(parse_formula(to_string(f)), f);
  EXPECT_THROW(parse_formula("ram_delay"), ArgumentError);
}

TEST(Decoder, MetricsMatchClosedForms) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto r = measure(build_decoder(n));
    EXPECT_EQ(r.gate_count, closed_form(Formula::DecoderGates, n));
    EXPECT_EQ(r.garbage_count, closed_form(Formula::DecoderGarbage, n));
    EXPECT_EQ(r.quantum_cost, closed_form(Formula::DecoderQc, n));
  }
  const auto r = measure(build_decoder(2));
  EXPECT_EQ(r.quantum_cost, 9u);
  EXPECT_EQ(r.delay, 9u);
  EXPECT_EQ(r.garbage_count, 1u);
}

TEST(Decoder, OneHotExhaustive) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto nl = build_decoder(n);
    for (unsigned a = 0; a < (1u << n); ++a) {
      Assignment in;
      for (unsigned k = 0; k < n; ++k)
        in["s" + std::to_string(k)] = (a >> k) & 1u;
      const auto p = partition(nl, evaluate(nl, in));
      unsigned high = 0;
      for (unsigned y = 0; y < (1u << n); ++y) {
        const auto v = p.primary.at("y" + std::to_string(y));
        high += v;
        EXPECT_EQ(v, y == a) << "n=" << n << " a=" << a << " y=" << y;
      }
      EXPECT_EQ(high, 1u);
    }
    EXPECT_TRUE(check_reversibility(nl).reversible);
  }
}

TEST(Decoder, Bounds) {
  EXPECT_THROW(build_decoder(0), BoundsError);
  EXPECT_THROW(build_decoder(GeneratorLimits::max_decoder_bits + 1),
               BoundsError);
}

TEST(Dff, MetricsAndNextState) {
  const auto nl = build_dff();
  const auto r = measure(nl);
  EXPECT_EQ(r.quantum_cost, 7u);
  EXPECT_EQ(r.delay, 7u);
  EXPECT_EQ(r.garbage_count, 1u);
  for (std::uint8_t clk = 0; clk < 2; ++clk)
    for (std::uint8_t d = 0; d < 2; ++d)
      for (std::uint8_t q = 0; q < 2; ++q) {
        const auto p =
            partition(nl, evaluate(nl, {{"clk", clk}, {"d", d}, {"q", q}}));
        const std::uint8_t next = clk ? d : q;
        EXPECT_EQ(p.state_next.at("q_next"), next);
        EXPECT_EQ(p.primary.at("q"), next);
        EXPECT_EQ(p.primary.at("q_bar"), 1 - next);
        EXPECT_EQ(p.primary.at("clk_bar"), 1 - clk);
      }
  EXPECT_TRUE(check_reversibility(nl).reversible);
}

TEST(MsDff, MetricsBothForms) {
  for (bool for_ram : {false, true}) {
    const auto nl = build_msdff_we(for_ram);
    const auto r = measure(nl);
    EXPECT_EQ(r.gate_count, for_ram ? 5u : 6u);
    EXPECT_EQ(r.quantum_cost, 17u);
    EXPECT_EQ(r.delay, 17u);
    EXPECT_EQ(r.garbage_count, 3u);
    EXPECT_TRUE(check_reversibility(nl).reversible);
  }
}

TEST(MsDff, HoldLoadLawExhaustive) {
  for (bool for_ram : {false, true})
    for (std::uint8_t w = 0; w < 2; ++w)
      for (std::uint8_t d = 0; d < 2; ++d)
        for (std::uint8_t s = 0; s < 2; ++s) {
          ClockedMachine m(
              std::make_shared<const Netlist>(build_msdff_we(for_ram)));
          m.set_state("qs", s);
          m.set_state("qm", s);
          const auto out = m.step_cycle({{"w", w}, {"d", d}});
          const std::uint8_t want = (w & d) ^ ((1 - w) & s);
          EXPECT_EQ(m.state("qs"), want);
          EXPECT_EQ(m.state("qm"), want);
          EXPECT_EQ(out.at("q"), want);
          EXPECT_EQ(out.at("q_bar"), 1 - want);
        }
}

TEST(Rram, CountsMatchClosedForms) {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 4; ++m) {
      SCOPED_TRACE("n=" + std::to_string(n) + " m=" + std::to_string(m));
      const auto r = measure(build_rram({n, m, RamVariant::PaperFaithful}));
      EXPECT_EQ(r.gate_count, closed_form(Formula::RamGates, n, m));
      EXPECT_EQ(r.garbage_count, closed_form(Formula::RamGarbage, n, m));
      EXPECT_EQ(r.quantum_cost, closed_form(Formula::RamQc, n, m));
    }
}

TEST(Rram, CompositionAudit) {
  const std::set<std::string> allowed = {"FG", "DFG", "TG", "MFRG1", "MFRG2"};
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (const auto nl = build_rram({n, m, RamVariant::PaperFaithful});
           const auto &g : nl.gates()) {
        // The read bus gate is a Feynman gate with one control per row.
        const bool feynman = g.gate->mnemonic().rfind("fg", 0) == 0;
        EXPECT_TRUE(allowed.count(g.gate->name()) || feynman)
            << g.gate->name();
      }
}

TEST(Rram, InterfaceNames) {
  const auto nl = build_rram({2, 3, RamVariant::Functional});
  for (const char *line : {"s0", "s1", "w", "clk", "d1", "d2", "d3"})
    EXPECT_EQ(nl.lines()[nl.line_index(line)].role, LineRole::PrimaryInput)
        << line;
  for (const char *out : {"q1", "q2", "q3"})
    EXPECT_EQ(nl.outputs()[nl.output_index(out)].role,
              OutputRole::PrimaryOutput);
  EXPECT_EQ(nl.lines()[nl.line_index(ram_slave_line(3, 2))].role,
            LineRole::StateFeedback);
  EXPECT_EQ(nl.param("n"), 2);
  EXPECT_EQ(nl.param("m"), 3);
}

TEST(Rram, SmallArraysAreReversible) {
  for (auto v : {RamVariant::PaperFaithful, RamVariant::Functional})
    EXPECT_TRUE(check_reversibility(build_rram({1, 1, v})).reversible);
}

TEST(Rram, Bounds) {
  EXPECT_THROW(build_rram({0, 1}), BoundsError);
  EXPECT_THROW(build_rram({1, 0}), BoundsError);
  EXPECT_THROW(build_rram({GeneratorLimits::max_address_bits + 1, 1}),
               BoundsError);
  EXPECT_THROW(build_rram({1, GeneratorLimits::max_word_bits + 1}),
               BoundsError);
  EXPECT_EQ(parse_ram_variant("paper_faithful"), RamVariant::PaperFaithful);
  EXPECT_THROW(parse_ram_variant("fast"), ArgumentError);
}

} // namespace
} // namespace revram
