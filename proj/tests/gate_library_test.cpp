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
#include "revram/gate_library.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace revram {
namespace {

using testing::index3;
using testing::reference_gates;
using testing::uniform;

TEST(GateCatalog, TablesMatchReferenceFunctions) {
  for (const auto &[name, fn] : reference_gates()) {
    SCOPED_TRACE(name);
    const auto g = builtin_gate(name);
    ASSERT_EQ(g->width(), 3u);
    for (unsigned x = 0; x < 8; ++x) {
      const auto want = fn(x & 4, x & 2, x & 1);
      EXPECT_EQ(g->apply(x), index3(want)) << "input " << x;
    }
  }
}

TEST(GateCatalog, NotAndFeynman) {
  const auto n = builtin_gate("NOT");
  EXPECT_EQ(n->permutation(), (std::vector<std::uint32_t>{1, 0}));
  const auto f = builtin_gate("FG");
  EXPECT_EQ(f->permutation(), (std::vector<std::uint32_t>{0, 1, 3, 2}));
}

TEST(GateCatalog, Costs) {
  const std::map<std::string, unsigned> costs = {
      {"NOT", 1}, {"FG", 1},  {"DFG", 2},   {"TG", 5},
      {"FRG", 5}, {"PG", 4},  {"MFRG1", 4}, {"MFRG2", 5}};
  for (const auto &[name, cost] : costs)
    EXPECT_EQ(builtin_gate(name)->quantum_cost(), cost) << name;
}

TEST(GateCatalog, CatalogGatesBijectivePrintedOnesNot) {
  for (const char *name :
       {"NOT", "FG", "DFG", "TG", "FRG", "PG", "MFRG1", "MFRG2"})
    EXPECT_TRUE(is_bijective(*builtin_gate(name))) << name;
  EXPECT_FALSE(is_bijective(*builtin_gate("MFRG1_PRINTED")));
  EXPECT_FALSE(is_bijective(*builtin_gate("MFRG2_PRINTED")));
}

TEST(GateCatalog, LookupByMnemonicAndCase) {
  EXPECT_EQ(builtin_gate("mf1")->name(), "MFRG1");
  EXPECT_EQ(builtin_gate("t3")->name(), "TG");
  EXPECT_EQ(builtin_gate("tg")->name(), "TG");
  EXPECT_EQ(builtin_gate("Mfrg2")->name(), "MFRG2");
  EXPECT_EQ(builtin_gate("fg5")->width(), 5u);
  EXPECT_THROW(builtin_gate("XYZ"), CatalogError);
  EXPECT_THROW(builtin_gate("fg0"), Error);
}

TEST(GateCatalog, NamesInOrder) {
  const auto names = catalog_names();
  ASSERT_GE(names.size(), 8u);
  EXPECT_EQ(names.front(), "NOT");
  for (const auto &n : names)
    EXPECT_EQ(builtin_gate(n)->name(), n);
}

TEST(GateCatalog, StoredDecompositionLengthsEqualCost) {
  for (const auto &name : catalog_names()) {
    const auto g = builtin_gate(name);
    if (g->decomposition()) {
      EXPECT_EQ(g->decomposition()->size(), g->quantum_cost()) << name;
    }
  }
  EXPECT_FALSE(builtin_gate("FRG")->decomposition());
  EXPECT_FALSE(builtin_gate("MFRG1")->decomposition());
  EXPECT_FALSE(builtin_gate("MFRG2")->decomposition());
}

TEST(GateCatalog, DelayIsDepthOrCost) {
  EXPECT_EQ(builtin_gate("DFG")->delay(), 2u);
  EXPECT_EQ(builtin_gate("TG")->delay(), 5u);
  EXPECT_EQ(builtin_gate("PG")->delay(), 4u);
  EXPECT_EQ(builtin_gate("MFRG1")->delay(), 4u);
  EXPECT_EQ(builtin_gate("MFRG2")->delay(), 5u);
}

TEST(FeynmanFanin, TargetReceivesParity) {
  for (unsigned controls = 1; controls <= 6; ++controls) {
    const auto g = feynman_fanin(controls);
    ASSERT_EQ(g->width(), controls + 1);
    EXPECT_EQ(g->quantum_cost(), controls);
    EXPECT_EQ(g->delay(), controls);
    EXPECT_TRUE(is_bijective(*g));
    for (std::uint32_t x = 0; x < (1u << g->width()); ++x) {
      auto bits = unpack_bits(x, g->width());
      unsigned parity = 0;
      for (unsigned k = 0; k < controls; ++k)
        parity ^= bits[k];
      auto want = bits;
      want.back() ^= parity;
      EXPECT_EQ(apply_gate(*g, bits), want);
    }
  }
  EXPECT_EQ(feynman_fanin(1)->name(), "FG");
  EXPECT_EQ(feynman_fanin(4), feynman_fanin(4));
}

TEST(GateLibrary, ApplyGateRejectsBadInput) {
  const auto g = builtin_gate("TG");
  const BitVector short_input{1, 0};
  const BitVector not_bits{1, 2, 0};
  EXPECT_THROW(apply_gate(*g, short_input), ArgumentError);
  EXPECT_THROW(apply_gate(*g, not_bits), ArgumentError);
}

TEST(GateLibrary, InverseComposesToIdentity) {
  for (const char *name : {"DFG", "TG", "FRG", "PG", "MFRG1", "MFRG2"}) {
    const auto g = builtin_gate(name);
    const auto inv = inverse_table(*g);
    for (std::uint32_t x = 0; x < 8; ++x)
      EXPECT_EQ(inv[g->apply(x)], x) << name;
  }
  EXPECT_THROW(inverse_table(*builtin_gate("MFRG1_PRINTED")), ArgumentError);
}

TEST(GateLibrary, RandomTablesBijectiveIffPermutation) {
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned width = 1 + uniform(5);
    std::vector<std::uint32_t> table(1u << width);
    for (auto &t : table)
      t = uniform(static_cast<unsigned>(table.size()));
    auto sorted = table;
    std::sort(sorted.begin(), sorted.end());
    const bool permutation =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const auto g = gate_from_table("rand", width, table, 0);
    EXPECT_EQ(is_bijective(*g), permutation);
  }
}

TEST(GateLibrary, RejectsMalformedTables) {
  EXPECT_THROW(gate_from_table("bad", 2, {0, 1, 2}, 0), ArgumentError);
  EXPECT_THROW(gate_from_table("bad", 2, {0, 1, 2, 4}, 0), ArgumentError);
  EXPECT_THROW(gate_from_table("bad", 0, {0}, 0), ArgumentError);
}

TEST(GateLibrary, PackUnpackRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned width = 1 + uniform(20);
    const std::uint32_t x = uniform(1u << width);
    EXPECT_EQ(pack_bits(unpack_bits(x, width)), x);
  }
  EXPECT_EQ(pack_bits(BitVector{1, 0, 0}), 4u);
}

TEST(GateLibrary, PrimitiveDepth) {
  const std::vector<PrimitiveOp> serial{cnot(0, 1), cnot(1, 2)};
  EXPECT_EQ(primitive_depth(serial, 3), 2u);
  const std::vector<PrimitiveOp> parallel{not_op(0), not_op(1), not_op(2)};
  EXPECT_EQ(primitive_depth(parallel, 3), 1u);
  EXPECT_EQ(to_string(cvdag(1, 2)), "CVDAG(1->2)");
  EXPECT_EQ(to_string(not_op(0)), "NOT(0)");
}

} // namespace
} // namespace revram
