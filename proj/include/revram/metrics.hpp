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

/// PrimitiveDepth weights each gate by its primitive depth and serializes
/// gates that share a line. Unit counts one per gate along the longest path;
/// it exists for comparison only.
enum class DelayModel { PrimitiveDepth, Unit };

std::string to_string(DelayModel model);
/// "depth" / "unit"; throws ArgumentError otherwise.
DelayModel parse_delay_model(const std::string &text);

struct MetricsReport {
  unsigned gate_count = 0;
  unsigned quantum_cost = 0;
  unsigned delay = 0;
  unsigned garbage_count = 0;
  unsigned line_count = 0;
  unsigned constant_inputs = 0;

  friend bool operator==(const MetricsReport &, const MetricsReport &) = default;
};

unsigned quantum_cost(const Netlist &netlist);
unsigned delay(const Netlist &netlist,
               DelayModel model = DelayModel::PrimitiveDepth);
unsigned garbage_count(const Netlist &netlist);

MetricsReport measure(const Netlist &netlist,
                      DelayModel model = DelayModel::PrimitiveDepth);

} // namespace revram
