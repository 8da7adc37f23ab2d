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
#include "revram/improvements.hpp"

#include <gtest/gtest.h>

namespace revram {
namespace {

TEST(ImprovementPercent, RoundsHalfUp) {
  EXPECT_EQ(improvement_percent(11, 9), 18);
  EXPECT_EQ(improvement_percent(10, 9), 10);
  EXPECT_EQ(improvement_percent(2, 1), 50);
  EXPECT_EQ(improvement_percent(7, 7), 0);
  EXPECT_EQ(improvement_percent(21, 17), 19);
  EXPECT_EQ(improvement_percent(19, 17), 11); // 10.53
  EXPECT_EQ(improvement_percent(200, 199), 1); // 0.5 rounds up
  EXPECT_EQ(improvement_percent(10, 11), -10);
  EXPECT_THROW(improvement_percent(0, 1), ArgumentError);
}

// Integer-exact reference: compare 100*(old-new)/old against p +- 1/2.
TEST(ImprovementPercent, ExhaustiveAgainstDefinition) {
  for (long old_v = 1; old_v <= 60; ++old_v)
    for (long new_v = 0; new_v <= 2 * old_v; ++new_v) {
      const long p = improvement_percent(old_v, new_v);
      const long twice = 200 * (old_v - new_v); // 2 * old * exact percent
      EXPECT_LE((2 * p - 1) * old_v, twice);
      EXPECT_GT((2 * p + 1) * old_v, twice);
    }
}

TEST(Improvements, AllPublishedPercentagesReproduce) {
  const auto rows = report_improvements();
  EXPECT_EQ(rows.size(), 13u);
  for (const auto &r : rows)
    EXPECT_TRUE(r.matches()) << r.design << " vs " << r.baseline << " "
                             << to_string(r.metric) << ": " << r.computed
                             << " != " << r.printed;
}

TEST(Improvements, UnitDelayModelBreaksDelayClaims) {
  bool any_mismatch = false;
  for (const auto &r : report_improvements(DelayModel::Unit))
    any_mismatch = any_mismatch || !r.matches();
  EXPECT_TRUE(any_mismatch);
}

} // namespace
} // namespace revram
