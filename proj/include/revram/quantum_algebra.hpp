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

#include "revram/gate_library.hpp"
#include "revram/primitive.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace revram {

/// Exact complex number (re + im*i) / 2^exponent with integer re, im.
///
/// Always held in canonical form: the exponent is as small as possible, so
/// equality of values is equality of fields.
class GaussianDyadic {
public:
  constexpr GaussianDyadic() = default;
  GaussianDyadic(std::int64_t re, std::int64_t im, unsigned exponent = 0);

  std::int64_t re() const noexcept { return re_; }
  std::int64_t im() const noexcept { return im_; }
  unsigned exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }

  GaussianDyadic conj() const { return {re_, -im_, exponent_}; }

  friend GaussianDyadic operator+(const GaussianDyadic &a,
                                  const GaussianDyadic &b);
  friend GaussianDyadic operator-(const GaussianDyadic &a,
                                  const GaussianDyadic &b);
  friend GaussianDyadic operator*(const GaussianDyadic &a,
                                  const GaussianDyadic &b);
  friend bool operator==(const GaussianDyadic &,
                         const GaussianDyadic &) = default;

  std::string to_string() const;

private:
  void canonicalize();

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
  unsigned exponent_ = 0;
};

/// Square matrix over GaussianDyadic, row-major.
class ExactUnitary {
public:
  explicit ExactUnitary(std::size_t dimension);

  static ExactUnitary identity(std::size_t dimension);
  /// The 0/1 matrix with a 1 at (table[x], x): maps basis state x to table[x].
  static ExactUnitary permutation(std::span<const std::uint32_t> table);

  std::size_t dimension() const noexcept { return dim_; }
  const GaussianDyadic &operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  GaussianDyadic &operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  ExactUnitary adjoint() const;
  bool is_unitary() const;
  std::size_t hash() const noexcept;

  friend ExactUnitary operator*(const ExactUnitary &a, const ExactUnitary &b);
  friend bool operator==(const ExactUnitary &, const ExactUnitary &) = default;

private:
  std::size_t dim_;
  std::vector<GaussianDyadic> entries_;
};

struct ExactUnitaryHash {
  std::size_t operator()(const ExactUnitary &u) const noexcept {
    return u.hash();
  }
};

/// Throws ArgumentError for out-of-range lines, control == target, or a
/// control on NOT / missing control on the others.
void validate_op(const PrimitiveOp &op, unsigned width);

/// 2^width embedding of a single primitive.
ExactUnitary primitive_unitary(const PrimitiveOp &op, unsigned width);

/// Product of the primitives with ops.front() acting first.
ExactUnitary sequence_unitary(std::span<const PrimitiveOp> ops, unsigned width);

/// primitive_unitary(op) * m, computed by row mixing instead of a full product.
ExactUnitary apply_primitive(const PrimitiveOp &op, unsigned width,
                             const ExactUnitary &m);

enum class Verdict { Verified, Mismatch, Absent };
std::string to_string(Verdict v);

/// Verified iff the stored decomposition multiplies out to the permutation
/// matrix exactly and its length equals the declared quantum cost.
Verdict verify_decomposition(const GateSpec &spec);

/// The primitive alphabet on `width` lines in search order.
std::vector<PrimitiveOp> primitive_alphabet(unsigned width);

struct SearchLimits {
  static constexpr unsigned max_width = 3;
  static constexpr unsigned max_length = 6;
};

/// Shortest primitive sequence (length <= max_len) whose unitary equals the
/// target's permutation matrix; ties broken by lexicographic order over the
/// alphabet. Meet-in-the-middle: the second half of each candidate length is
/// tabulated by unitary, the first half enumerated in order.
/// Throws BoundsError if target.width() > 3 or max_len > 6, ArgumentError if
/// the gate is not bijective.
std::optional<std::vector<PrimitiveOp>>
search_min_decomposition(const GateSpec &target, unsigned max_len);

/// Same search against an arbitrary unitary.
std::optional<std::vector<PrimitiveOp>>
search_min_sequence(const ExactUnitary &target, unsigned width,
                    unsigned max_len);

} // namespace revram
