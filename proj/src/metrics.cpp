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

#include "revram/metrics.hpp"

#include "revram/error.hpp"

#include <algorithm>

namespace revram {

std::string to_string(DelayModel model) {
  return model == DelayModel::Unit ? "unit" : "depth";
}

DelayModel parse_delay_model(const std::string &text) {
  if (text == "depth")
    return DelayModel::PrimitiveDepth;
  if (text == "unit")
    return DelayModel::Unit;
  throw ArgumentError("unknown delay model '" + text + "' (use depth|unit)");
}

unsigned quantum_cost(const Netlist &netlist) {
  unsigned total = 0;
  for (const auto &g : netlist.gates())
    total += g.gate->quantum_cost();
  return total;
}

unsigned delay(const Netlist &netlist, DelayModel model) {
  // A gate starts once every line it touches is free and finishes
  // weight(gate) later, holding all of its lines until then.
  std::vector<unsigned> ready(netlist.line_count(), 0);
  unsigned finish = 0;
  for (const auto &g : netlist.gates()) {
    unsigned start = 0;
    for (auto b : g.bindings)
      start = std::max(start, ready[b]);
    const unsigned weight =
        model == DelayModel::Unit ? 1u : g.gate->delay();
    for (auto b : g.bindings)
      ready[b] = start + weight;
    finish = std::max(finish, start + weight);
  }
  return finish;
}

unsigned garbage_count(const Netlist &netlist) {
  return static_cast<unsigned>(std::count_if(
      netlist.outputs().begin(), netlist.outputs().end(),
      [](const Output &o) { return o.role == OutputRole::Garbage; }));
}

MetricsReport measure(const Netlist &netlist, DelayModel model) {
  MetricsReport r;
  r.gate_count = static_cast<unsigned>(netlist.gates().size());
  r.quantum_cost = quantum_cost(netlist);
  r.delay = delay(netlist, model);
  r.garbage_count = garbage_count(netlist);
  r.line_count = static_cast<unsigned>(netlist.line_count());
  for (const auto &l : netlist.lines())
    r.constant_inputs += l.role == LineRole::ConstantZero ||
                         l.role == LineRole::ConstantOne;
  return r;
}

} // namespace revram
