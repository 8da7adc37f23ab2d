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
#include "revram/sequential_sim.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace revram {
namespace {

using testing::uniform;

std::shared_ptr<const Netlist> msdff() {
  return std::make_shared<const Netlist>(build_msdff_we(false));
}

TEST(ClockedMachine, StartsAtZero) {
  ClockedMachine m(msdff());
  EXPECT_EQ(m.state(), (BitVector{0, 0}));
  EXPECT_EQ(m.input_names(), (std::vector<std::string>{"w", "d"}));
  EXPECT_FALSE(m.last_phase());
}

TEST(ClockedMachine, WriteOneLoads) {
  ClockedMachine m(msdff());
  const auto out = m.step_cycle({{"w", 1}, {"d", 1}});
  EXPECT_EQ(out.at("q"), 1);
  EXPECT_EQ(m.last_phase(), ClockedMachine::Phase::ClkLow);
}

TEST(ClockedMachine, DisabledWriteHolds) {
  for (std::uint8_t s = 0; s < 2; ++s) {
    ClockedMachine m(msdff());
    if (s)
      m.step_cycle({{"w", 1}, {"d", 1}});
    for (int cycle = 0; cycle < 10; ++cycle) {
      const auto out = m.step_cycle({{"w", 0}, {"d", std::uint8_t(cycle & 1)}});
      EXPECT_EQ(out.at("q"), s);
    }
  }
}

TEST(ClockedMachine, OutputChangesOnlyOnFallingPhase) {
  ClockedMachine m(msdff());
  auto out = m.step_phase(true, {{"w", 1}, {"d", 0}});
  EXPECT_EQ(out.at("q"), 0);
  out = m.step_phase(true, {{"w", 1}, {"d", 1}});
  EXPECT_EQ(out.at("q"), 0);
  EXPECT_EQ(m.state("qs"), 0);
  out = m.step_phase(false, {{"w", 1}, {"d", 1}});
  EXPECT_EQ(out.at("q"), 1);
  EXPECT_EQ(m.state("qs"), 1);
}

TEST(ClockedMachine, RandomCyclesFollowCharacteristicEquation) {
  for (int trial = 0; trial < 50; ++trial) {
    ClockedMachine m(msdff());
    std::uint8_t stored = 0;
    for (int cycle = 0; cycle < 40; ++cycle) {
      const std::uint8_t w = uniform(2), d = uniform(2);
      stored = w ? d : stored;
      const auto out = m.step_cycle({{"w", w}, {"d", d}});
      ASSERT_EQ(out.at("q"), stored);
    }
  }
}

TEST(ClockedMachine, InputErrors) {
  ClockedMachine m(msdff());
  EXPECT_THROW(m.step_cycle({{"w", 1}}), ArgumentError);
  EXPECT_THROW(m.step_cycle({{"w", 1}, {"d", 1}, {"clk", 1}}), ArgumentError);
  EXPECT_THROW(m.step_cycle({{"w", 1}, {"d", 3}}), ArgumentError);
  EXPECT_THROW(m.state("nope"), ArgumentError);
  EXPECT_THROW(ClockedMachine(nullptr), ArgumentError);
}

TEST(RamScript, ParseAndFormat) {
  const auto s = parse_script("# demo\nw 2 101\n\n  r 2   # read back\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], RamOp::write(2, {1, 0, 1}));
  EXPECT_EQ(s[1], RamOp::read(2));
  EXPECT_EQ(to_string(s[0]), "w 2 101");
  EXPECT_EQ(to_string(s[1]), "r 2");
}

TEST(RamScript, ParseErrors) {
  auto line_of = [](const std::string &text) {
    try {
      parse_script(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("r 0\nx 1\n"), 2u);
  EXPECT_EQ(line_of("w 1\n"), 1u);
  EXPECT_EQ(line_of("r 0\nw 1 12\n"), 2u);
  EXPECT_EQ(line_of("r -1\n"), 1u);
  EXPECT_EQ(line_of("r 0 1\n"), 1u);
}

TEST(RamScript, ValidateAgainstConfig) {
  const RamConfig c{1, 2, RamVariant::Functional};
  EXPECT_THROW(validate(OpScript{RamOp::read(2)}, c), BoundsError);
  EXPECT_THROW(validate(OpScript{RamOp::write(0, {1})}, c), BoundsError);
  EXPECT_NO_THROW(validate(OpScript{RamOp::write(1, {1, 0})}, c));
}

TEST(RunScript, FunctionalWriteThenRead) {
  const auto reads = run_script({2, 3, RamVariant::Functional},
                                {RamOp::write(2, {1, 0, 1}), RamOp::read(2)});
  ASSERT_EQ(reads.size(), 1u);
  EXPECT_EQ(reads[0], (BitVector{1, 0, 1}));
}

TEST(RunScript, FreshReadIsZero) {
  const auto reads =
      run_script({2, 3, RamVariant::Functional}, {RamOp::read(0)});
  EXPECT_EQ(reads[0], (BitVector{0, 0, 0}));
}

TEST(RunScript, PaperBusIsParityOfRows) {
  const RamConfig c{1, 1, RamVariant::PaperFaithful};
  const OpScript s{RamOp::write(0, {1}), RamOp::write(1, {1}), RamOp::read(0)};
  EXPECT_EQ(run_script(c, s)[0], (BitVector{0}));
  const auto r = compare_script(c, s);
  EXPECT_EQ(r.divergences, 1u);
  ASSERT_TRUE(r.first);
  EXPECT_EQ(r.first->op, 2u);
  EXPECT_EQ(r.first->expected, (BitVector{1}));
  EXPECT_EQ(r.first->actual, (BitVector{0}));
  EXPECT_EQ(r.refresh_violations, 0u);
  EXPECT_EQ(r.isolation_violations, 0u);
}

// The paper read bus XORs every row; check it against that model.
TEST(RunScript, PaperBusEqualsXorOfOracleRows) {
  const RamConfig c{2, 2, RamVariant::PaperFaithful};
  for (int trial = 0; trial < 20; ++trial) {
    const auto script = random_script(c, 24, 100 + trial);
    RamOracle oracle(c);
    std::vector<BitVector> expected;
    for (const auto &op : script) {
      if (op.kind == RamOp::Kind::Write) {
        oracle.write(op.address, op.word);
        continue;
      }
      BitVector parity(c.m, 0);
      for (const auto &w : oracle.words())
        for (unsigned j = 0; j < c.m; ++j)
          parity[j] ^= w[j];
      expected.push_back(parity);
    }
    EXPECT_EQ(run_script(c, script), expected);
  }
}

TEST(RamMachine, UnselectedRowsUntouched) {
  RamMachine m({2, 2, RamVariant::Functional});
  m.execute(RamOp::write(1, {1, 1}));
  const auto before = m.row_state(1);
  m.execute(RamOp::write(2, {1, 0}));
  m.execute(RamOp::read(3));
  EXPECT_EQ(m.row_state(1), before);
  const auto words = m.stored_words();
  EXPECT_EQ(words[1], (BitVector{1, 1}));
  EXPECT_EQ(words[2], (BitVector{1, 0}));
  EXPECT_EQ(words[0], (BitVector{0, 0}));
}

TEST(Differential, FunctionalMatchesOracle) {
  const auto r = differential_test({2, 2, RamVariant::Functional}, 100, 32, 7);
  EXPECT_EQ(r.scripts, 100u);
  EXPECT_EQ(r.operations, 3200u);
  EXPECT_TRUE(r.clean());
  EXPECT_FALSE(r.first);
}

TEST(Differential, Deterministic) {
  const RamConfig c{2, 2, RamVariant::PaperFaithful};
  const auto a = differential_test(c, 10, 16, 42);
  const auto b = differential_test(c, 10, 16, 42);
  EXPECT_EQ(a.divergences, b.divergences);
  ASSERT_TRUE(a.first && b.first);
  EXPECT_EQ(a.first->script, b.first->script);
  EXPECT_EQ(a.first->op, b.first->op);
  EXPECT_EQ(random_script(c, 16, 5), random_script(c, 16, 5));
  EXPECT_NE(random_script(c, 16, 5), random_script(c, 16, 6));
}

TEST(Differential, PaperVariantDivergesOnlyOnReads) {
  const auto r =
      differential_test({2, 2, RamVariant::PaperFaithful}, 50, 32, 1);
  EXPECT_GT(r.divergences, 0u);
  EXPECT_EQ(r.refresh_violations, 0u);
  EXPECT_EQ(r.isolation_violations, 0u);
  ASSERT_TRUE(r.first);
  EXPECT_EQ(r.first->operation.kind, RamOp::Kind::Read);
}

TEST(Differential, LastWriterWins) {
  const RamConfig c{2, 2, RamVariant::Functional};
  OpScript s;
  for (unsigned i = 0; i < 8; ++i)
    s.push_back(RamOp::write(3, {std::uint8_t(i & 1), std::uint8_t(i >> 1 & 1)}));
  s.push_back(RamOp::read(3));
  EXPECT_EQ(run_script(c, s).back(), (BitVector{1, 1}));
  EXPECT_TRUE(compare_script(c, s).clean());
}

TEST(Differential, ReadOnlyScriptsReadZero) {
  const RamConfig c{2, 4, RamVariant::Functional};
  OpScript s;
  for (unsigned a = 0; a < 4; ++a)
    s.push_back(RamOp::read(a));
  for (const auto &w : run_script(c, s))
    EXPECT_EQ(w, BitVector(4, 0));
}

TEST(Exhaustive, SmallestArray) {
  const auto r = exhaustive_check({1, 1, RamVariant::Functional}, 6);
  // 6 operations: two writes and one read per address.
  long expected = 0, layer = 1;
  for (int l = 0; l < 6; ++l)
    expected += (layer *= 6);
  EXPECT_EQ(r.scripts, static_cast<std::size_t>(expected));
  EXPECT_TRUE(r.clean());
  EXPECT_THROW(exhaustive_check({2, 4, RamVariant::Functional}, 6),
               BoundsError);
}

} // namespace
} // namespace revram
