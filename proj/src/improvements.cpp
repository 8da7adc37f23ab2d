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

#include "revram/improvements.hpp"

#include "revram/error.hpp"
#include "revram/generators.hpp"

namespace revram {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

struct Claim {
  const char *design;
  const char *baseline;
  ImprovementMetric metric;
  unsigned baseline_value;
  long printed;
};

// Baseline figures and printed percentages of the published comparison.
constexpr Claim kClaims[] = {
    {"decoder", "mahammad2010", ImprovementMetric::QuantumCost, 11, 18},
    {"decoder", "mahammad2010", ImprovementMetric::Delay, 11, 18},
    {"decoder", "mahammad2010", ImprovementMetric::Garbage, 2, 50},
    {"decoder", "morrison2011", ImprovementMetric::QuantumCost, 10, 10},
    {"decoder", "morrison2011", ImprovementMetric::Delay, 10, 10},
    {"dff", "thapliyal2010", ImprovementMetric::QuantumCost, 7, 0},
    {"dff", "thapliyal2010", ImprovementMetric::Delay, 7, 0},
    {"dff", "thapliyal2010", ImprovementMetric::Garbage, 2, 50},
    {"dff", "jamal2012", ImprovementMetric::QuantumCost, 7, 0},
    {"dff", "jamal2012", ImprovementMetric::Delay, 7, 0},
    {"dff", "jamal2012", ImprovementMetric::Garbage, 2, 50},
    {"msdff", "morrison2011", ImprovementMetric::QuantumCost, 21, 19},
    {"msdff", "morrison2011", ImprovementMetric::Delay, 19, 11},
};

unsigned pick(const MetricsReport &r, ImprovementMetric metric) {
  switch (metric) {
  case ImprovementMetric::QuantumCost:
    return r.quantum_cost;
  case ImprovementMetric::Delay:
    return r.delay;
  case ImprovementMetric::Garbage:
    return r.garbage_count;
  }
  return 0;
}

} // namespace

std::string to_string(ImprovementMetric metric) {
  switch (metric) {
  case ImprovementMetric::QuantumCost:
    return "quantum_cost";
  case ImprovementMetric::Delay:
    return "delay";
  case ImprovementMetric::Garbage:
    return "garbage";
  }
  return "?";
}

long improvement_percent(unsigned old_value, unsigned new_value) {
  if (old_value == 0)
    throw ArgumentError("improvement against a zero baseline");
  const long old_v = old_value;
  const long diff = old_v - static_cast<long>(new_value);
  return floor_div(200 * diff + old_v, 2 * old_v);
}

std::vector<ImprovementRow> report_improvements(DelayModel model) {
  const auto decoder = measure(build_decoder(2), model);
  const auto dff = measure(build_dff(), model);
  const auto msdff = measure(build_msdff_we(false), model);

  std::vector<ImprovementRow> rows;
  for (const auto &claim : kClaims) {
    const std::string design = claim.design;
    const auto &ours = design == "decoder" ? decoder
                       : design == "dff"   ? dff
                                           : msdff;
    ImprovementRow row;
    row.design = design;
    row.baseline = claim.baseline;
    row.metric = claim.metric;
    row.baseline_value = claim.baseline_value;
    row.measured = pick(ours, claim.metric);
    row.computed = improvement_percent(row.baseline_value, row.measured);
    row.printed = claim.printed;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace revram
