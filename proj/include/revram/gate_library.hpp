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

#include "revram/primitive.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revram {

/// One bit per element, each 0 or 1. Element 0 is line A.
using BitVector = std::vector<std::uint8_t>;

/// A k x k gate given by its truth table.
///
/// Table index i is the input pattern with line A as the most significant
/// bit; the entry is the output pattern in the same bit order. Values are
/// immutable once constructed and are shared through GateRef.
class GateSpec {
public:
  GateSpec(std::string name, std::string mnemonic, unsigned width,
           std::vector<std::uint32_t> permutation, unsigned quantum_cost,
           std::optional<std::vector<PrimitiveOp>> decomposition = {});

  const std::string &name() const noexcept { return name_; }
  const std::string &mnemonic() const noexcept { return mnemonic_; }
  unsigned width() const noexcept { return width_; }
  const std::vector<std::uint32_t> &permutation() const noexcept {
    return permutation_;
  }
  unsigned quantum_cost() const noexcept { return quantum_cost_; }
  /// Primitive depth of the stored decomposition, or quantum_cost() when
  /// no decomposition is stored.
  unsigned delay() const noexcept { return delay_; }
  const std::optional<std::vector<PrimitiveOp>> &decomposition() const noexcept {
    return decomposition_;
  }

  std::uint32_t apply(std::uint32_t pattern) const {
    return permutation_[pattern];
  }

private:
  std::string name_;
  std::string mnemonic_;
  unsigned width_;
  std::vector<std::uint32_t> permutation_;
  unsigned quantum_cost_;
  unsigned delay_;
  std::optional<std::vector<PrimitiveOp>> decomposition_;
};

using GateRef = std::shared_ptr<const GateSpec>;

/// Look up a catalog gate by canonical name (FG, DFG, TG, FRG, PG, MFRG1,
/// MFRG2, NOT, MFRG1_PRINTED, MFRG2_PRINTED) or by netlist mnemonic (fg,
/// dfg, t3, f3, p3, mf1, mf2, not, mf1p, mf2p, fg<w>). Names are matched
/// case-insensitively. Throws CatalogError for anything else.
GateRef builtin_gate(std::string_view name);

/// Canonical names of the fixed catalog, in presentation order.
std::vector<std::string> catalog_names();

/// Multi-control Feynman gate: `controls` pass-through lines followed by a
/// target that receives their parity. Width controls+1, cost `controls`,
/// decomposed into one CNOT per control. controls == 1 is plain FG.
GateRef feynman_fanin(unsigned controls);

/// Import a gate from a raw table. No bijectivity check is made here.
GateRef gate_from_table(std::string name, unsigned width,
                        std::vector<std::uint32_t> table,
                        unsigned quantum_cost);

bool is_bijective(const GateSpec &spec);

/// Throws ArgumentError when input.size() != spec.width() or an element is
/// not 0/1.
BitVector apply_gate(const GateSpec &spec, std::span<const std::uint8_t> input);

/// Table of the inverse map. Throws ArgumentError if spec is not bijective.
std::vector<std::uint32_t> inverse_table(const GateSpec &spec);

/// Length of the longest chain of primitives sharing lines (ASAP schedule).
unsigned primitive_depth(std::span<const PrimitiveOp> ops, unsigned width);

/// Pack/unpack between bit vectors and table indices (element 0 = MSB).
std::uint32_t pack_bits(std::span<const std::uint8_t> bits);
BitVector unpack_bits(std::uint32_t pattern, unsigned width);

} // namespace revram
