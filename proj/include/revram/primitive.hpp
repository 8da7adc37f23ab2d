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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace revram {

/// The 1x1 and 2x2 quantum primitives that quantum cost is counted in.
/// Declaration order is the lexicographic order used by the search.
enum class PrimitiveKind : std::uint8_t { Not, Cnot, Cv, CvDag };

/// One primitive bound to circuit lines. Line 0 is line A, the most
/// significant bit of a basis-state index.
struct PrimitiveOp {
  PrimitiveKind kind = PrimitiveKind::Not;
  unsigned target = 0;
  std::optional<unsigned> control;

  friend bool operator==(const PrimitiveOp &, const PrimitiveOp &) = default;

  /// Ordering by (kind, control, target); NOT carries no control and sorts
  /// as if its control were -1.
  friend std::strong_ordering operator<=>(const PrimitiveOp &a,
                                          const PrimitiveOp &b) {
    if (auto c = a.kind <=> b.kind; c != 0)
      return c;
    const long ca = a.control ? static_cast<long>(*a.control) : -1;
    const long cb = b.control ? static_cast<long>(*b.control) : -1;
    if (auto c = ca <=> cb; c != 0)
      return c;
    return a.target <=> b.target;
  }
};

inline PrimitiveOp not_op(unsigned target) {
  return {PrimitiveKind::Not, target, std::nullopt};
}
inline PrimitiveOp cnot(unsigned control, unsigned target) {
  return {PrimitiveKind::Cnot, target, control};
}
inline PrimitiveOp cv(unsigned control, unsigned target) {
  return {PrimitiveKind::Cv, target, control};
}
inline PrimitiveOp cvdag(unsigned control, unsigned target) {
  return {PrimitiveKind::CvDag, target, control};
}

/// "NOT(2)", "CNOT(0->1)", "CV(1->2)", "CVDAG(0->2)".
std::string to_string(const PrimitiveOp &op);

} // namespace revram
