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

#include "revram/metrics.hpp"

#include <string>
#include <vector>

namespace revram {

enum class ImprovementMetric { QuantumCost, Delay, Garbage };
std::string to_string(ImprovementMetric metric);

/// One published improvement claim, recomputed from our measured design.
struct ImprovementRow {
  std::string design;   ///< "decoder", "dff" or "msdff"
  std::string baseline; ///< prior design, e.g. "mahammad2010"
  ImprovementMetric metric = ImprovementMetric::QuantumCost;
  unsigned baseline_value = 0;
  unsigned measured = 0;
  long computed = 0; ///< percent, rounded half up
  long printed = 0;  ///< percent as published

  bool matches() const noexcept { return computed == printed; }
};

/// (old - new) / old in percent, rounded half up. Throws ArgumentError when
/// old is 0.
long improvement_percent(unsigned old_value, unsigned new_value);

/// Measures the 2-to-4 decoder, the D flip-flop and the standalone
/// write-enable flip-flop and recomputes every published improvement
/// percentage against the cited baseline figures.
std::vector<ImprovementRow>
report_improvements(DelayModel model = DelayModel::PrimitiveDepth);

} // namespace revram
