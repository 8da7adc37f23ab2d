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

#include "revram/quantum_algebra.hpp"

#include "revram/error.hpp"

#include <unordered_map>

namespace revram {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error("GaussianDyadic overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error("GaussianDyadic overflow");
  return out;
}

std::int64_t scale(std::int64_t v, unsigned shift) {
  if (shift >= 62)
    throw Error("GaussianDyadic overflow");
  return checked_mul(v, std::int64_t{1} << shift);
}

// Exact embedding width; above it verification falls back to classical
// simulation, which only covers NOT/CNOT sequences.
constexpr unsigned kMaxMatrixWidth = 6;

unsigned bit_of(std::size_t index, unsigned line, unsigned width) {
  return (index >> (width - 1 - line)) & 1u;
}

std::size_t mask_of(unsigned line, unsigned width) {
  return std::size_t{1} << (width - 1 - line);
}

// Entries of V (diag, off) and V-dagger (conjugates).
const GaussianDyadic kVDiag{1, 1, 1};
const GaussianDyadic kVOff{1, -1, 1};

} // namespace

GaussianDyadic::GaussianDyadic(std::int64_t re, std::int64_t im,
                               unsigned exponent)
    : re_(re), im_(im), exponent_(exponent) {
  canonicalize();
}

void GaussianDyadic::canonicalize() {
  if (re_ == 0 && im_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && re_ % 2 == 0 && im_ % 2 == 0) {
    re_ /= 2;
    im_ /= 2;
    --exponent_;
  }
}

GaussianDyadic operator+(const GaussianDyadic &a, const GaussianDyadic &b) {
  const unsigned e = std::max(a.exponent_, b.exponent_);
  const auto sa = e - a.exponent_;
  const auto sb = e - b.exponent_;
  return {checked_add(scale(a.re_, sa), scale(b.re_, sb)),
          checked_add(scale(a.im_, sa), scale(b.im_, sb)), e};
}

GaussianDyadic operator-(const GaussianDyadic &a, const GaussianDyadic &b) {
  return a + GaussianDyadic(-b.re_, -b.im_, b.exponent_);
}

GaussianDyadic operator*(const GaussianDyadic &a, const GaussianDyadic &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  const auto re = checked_add(checked_mul(a.re_, b.re_),
                              -checked_mul(a.im_, b.im_));
  const auto im = checked_add(checked_mul(a.re_, b.im_),
                              checked_mul(a.im_, b.re_));
  return {re, im, a.exponent_ + b.exponent_};
}

std::string GaussianDyadic::to_string() const {
  std::string s = "(" + std::to_string(re_);
  s += im_ < 0 ? "-" : "+";
  s += std::to_string(im_ < 0 ? -im_ : im_) + "i)";
  if (exponent_ > 0)
    s += "/" + std::to_string(std::int64_t{1} << exponent_);
  return s;
}

ExactUnitary::ExactUnitary(std::size_t dimension)
    : dim_(dimension), entries_(dimension * dimension) {}

ExactUnitary ExactUnitary::identity(std::size_t dimension) {
  ExactUnitary u(dimension);
  for (std::size_t i = 0; i < dimension; ++i)
    u(i, i) = GaussianDyadic(1, 0);
  return u;
}

ExactUnitary ExactUnitary::permutation(std::span<const std::uint32_t> table) {
  ExactUnitary u(table.size());
  for (std::size_t x = 0; x < table.size(); ++x)
    u(table[x], x) = GaussianDyadic(1, 0);
  return u;
}

ExactUnitary ExactUnitary::adjoint() const {
  ExactUnitary out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      out(c, r) = (*this)(r, c).conj();
  return out;
}

ExactUnitary operator*(const ExactUnitary &a, const ExactUnitary &b) {
  if (a.dim_ != b.dim_)
    throw ArgumentError("matrix dimension mismatch");
  const auto n = a.dim_;
  ExactUnitary out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const auto &lhs = a(r, k);
      if (lhs.is_zero())
        continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto &rhs = b(k, c);
        if (!rhs.is_zero())
          out(r, c) = out(r, c) + lhs * rhs;
      }
    }
  return out;
}

bool ExactUnitary::is_unitary() const {
  return (*this) * adjoint() == identity(dim_);
}

std::size_t ExactUnitary::hash() const noexcept {
  std::size_t h = dim_;
  for (const auto &e : entries_) {
    const auto mix = std::hash<std::int64_t>{}(e.re() * 31 + e.im()) ^
                     (std::size_t(e.exponent()) << 17);
    h ^= mix + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void validate_op(const PrimitiveOp &op, unsigned width) {
  if (op.target >= width)
    throw ArgumentError(to_string(op) + ": target out of range for width " +
                        std::to_string(width));
  if (op.kind == PrimitiveKind::Not) {
    if (op.control)
      throw ArgumentError("NOT takes no control line");
    return;
  }
  if (!op.control)
    throw ArgumentError(to_string(op) + ": missing control line");
  if (*op.control >= width)
    throw ArgumentError(to_string(op) + ": control out of range for width " +
                        std::to_string(width));
  if (*op.control == op.target)
    throw ArgumentError(to_string(op) + ": control equals target");
}

ExactUnitary primitive_unitary(const PrimitiveOp &op, unsigned width) {
  validate_op(op, width);
  const std::size_t dim = std::size_t{1} << width;
  const auto t = mask_of(op.target, width);
  ExactUnitary u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const bool active = !op.control || bit_of(col, *op.control, width);
    if (!active) {
      u(col, col) = GaussianDyadic(1, 0);
      continue;
    }
    switch (op.kind) {
    case PrimitiveKind::Not:
    case PrimitiveKind::Cnot:
      u(col ^ t, col) = GaussianDyadic(1, 0);
      break;
    case PrimitiveKind::Cv:
      u(col, col) = kVDiag;
      u(col ^ t, col) = kVOff;
      break;
    case PrimitiveKind::CvDag:
      u(col, col) = kVDiag.conj();
      u(col ^ t, col) = kVOff.conj();
      break;
    }
  }
  return u;
}

ExactUnitary sequence_unitary(std::span<const PrimitiveOp> ops,
                              unsigned width) {
  auto u = ExactUnitary::identity(std::size_t{1} << width);
  for (const auto &op : ops)
    u = primitive_unitary(op, width) * u;
  return u;
}

ExactUnitary apply_primitive(const PrimitiveOp &op, unsigned width,
                             const ExactUnitary &m) {
  const std::size_t dim = m.dimension();
  const auto t = mask_of(op.target, width);
  ExactUnitary out = m;
  for (std::size_t row = 0; row < dim; ++row) {
    if (row & t)
      continue; // handled together with its target-0 partner
    if (op.control && !bit_of(row, *op.control, width))
      continue;
    const auto partner = row | t;
    for (std::size_t c = 0; c < dim; ++c) {
      const auto lo = m(row, c);
      const auto hi = m(partner, c);
      switch (op.kind) {
      case PrimitiveKind::Not:
      case PrimitiveKind::Cnot:
        out(row, c) = hi;
        out(partner, c) = lo;
        break;
      case PrimitiveKind::Cv:
        out(row, c) = kVDiag * lo + kVOff * hi;
        out(partner, c) = kVOff * lo + kVDiag * hi;
        break;
      case PrimitiveKind::CvDag:
        out(row, c) = kVDiag.conj() * lo + kVOff.conj() * hi;
        out(partner, c) = kVOff.conj() * lo + kVDiag.conj() * hi;
        break;
      }
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Verified:
    return "verified";
  case Verdict::Mismatch:
    return "mismatch";
  case Verdict::Absent:
    return "absent";
  }
  return "?";
}

Verdict verify_decomposition(const GateSpec &spec) {
  if (!spec.decomposition())
    return Verdict::Absent;
  const auto &ops = *spec.decomposition();
  for (const auto &op : ops)
    validate_op(op, spec.width());

  bool equal = false;
  if (spec.width() <= kMaxMatrixWidth) {
    equal = sequence_unitary(ops, spec.width()) ==
            ExactUnitary::permutation(spec.permutation());
  } else {
    for (const auto &op : ops)
      if (op.kind != PrimitiveKind::Not && op.kind != PrimitiveKind::Cnot)
        throw BoundsError("exact verification of non-classical primitives is "
                          "limited to width " +
                          std::to_string(kMaxMatrixWidth));
    // Classical primitives are permutation matrices: compare per basis state.
    equal = true;
    const std::size_t dim = std::size_t{1} << spec.width();
    for (std::size_t x = 0; x < dim && equal; ++x) {
      std::size_t y = x;
      for (const auto &op : ops)
        if (!op.control || bit_of(y, *op.control, spec.width()))
          y ^= mask_of(op.target, spec.width());
      equal = y == spec.permutation()[x];
    }
  }
  if (!equal || ops.size() != spec.quantum_cost())
    return Verdict::Mismatch;
  return Verdict::Verified;
}

std::vector<PrimitiveOp> primitive_alphabet(unsigned width) {
  std::vector<PrimitiveOp> ops;
  for (unsigned t = 0; t < width; ++t)
    ops.push_back(not_op(t));
  for (auto kind : {PrimitiveKind::Cnot, PrimitiveKind::Cv,
                    PrimitiveKind::CvDag})
    for (unsigned c = 0; c < width; ++c)
      for (unsigned t = 0; t < width; ++t)
        if (c != t)
          ops.push_back({kind, t, c});
  return ops;
}

namespace {

using SuffixTable =
    std::unordered_map<ExactUnitary, std::vector<PrimitiveOp>, ExactUnitaryHash>;

class MeetInTheMiddle {
public:
  MeetInTheMiddle(const ExactUnitary &target, unsigned width)
      : target_(target), width_(width), alphabet_(primitive_alphabet(width)) {}

  std::optional<std::vector<PrimitiveOp>> run(unsigned max_len) {
    const auto id = ExactUnitary::identity(target_.dimension());
    if (target_ == id)
      return std::vector<PrimitiveOp>{};
    for (unsigned len = 1; len <= max_len; ++len) {
      const unsigned back = len / 2;
      const unsigned front = len - back;
      const auto &table = suffixes(back);
      std::vector<PrimitiveOp> prefix;
      if (auto hit = scan_prefixes(front, id, prefix, table))
        return hit;
    }
    return std::nullopt;
  }

private:
  // Lexicographically first sequence of exactly `len` primitives for each
  // reachable unitary.
  const SuffixTable &suffixes(unsigned len) {
    while (tables_.size() <= len) {
      const auto n = static_cast<unsigned>(tables_.size());
      SuffixTable table;
      std::vector<PrimitiveOp> seq;
      fill(n, ExactUnitary::identity(target_.dimension()), seq, table);
      tables_.push_back(std::move(table));
    }
    return tables_[len];
  }

  void fill(unsigned remaining, const ExactUnitary &acc,
            std::vector<PrimitiveOp> &seq, SuffixTable &table) {
    if (remaining == 0) {
      table.try_emplace(acc, seq);
      return;
    }
    for (const auto &op : alphabet_) {
      seq.push_back(op);
      fill(remaining - 1, apply_primitive(op, width_, acc), seq, table);
      seq.pop_back();
    }
  }

  std::optional<std::vector<PrimitiveOp>>
  scan_prefixes(unsigned remaining, const ExactUnitary &acc,
                std::vector<PrimitiveOp> &prefix, const SuffixTable &table) {
    if (remaining == 0) {
      // target = suffix * prefix  =>  suffix = target * prefix^dagger
      const auto needed = target_ * acc.adjoint();
      if (auto it = table.find(needed); it != table.end()) {
        auto out = prefix;
        out.insert(out.end(), it->second.begin(), it->second.end());
        return out;
      }
      return std::nullopt;
    }
    for (const auto &op : alphabet_) {
      prefix.push_back(op);
      auto hit = scan_prefixes(remaining - 1, apply_primitive(op, width_, acc),
                               prefix, table);
      prefix.pop_back();
      if (hit)
        return hit;
    }
    return std::nullopt;
  }

  const ExactUnitary &target_;
  unsigned width_;
  std::vector<PrimitiveOp> alphabet_;
  std::vector<SuffixTable> tables_;
};

} // namespace

std::optional<std::vector<PrimitiveOp>>
search_min_sequence(const ExactUnitary &target, unsigned width,
                    unsigned max_len) {
  if (width == 0 || width > SearchLimits::max_width)
    throw BoundsError("search supports widths 1.." +
                      std::to_string(SearchLimits::max_width) + ", got " +
                      std::to_string(width));
  if (max_len > SearchLimits::max_length)
    throw BoundsError("search supports max_len <= " +
                      std::to_string(SearchLimits::max_length) + ", got " +
                      std::to_string(max_len));
  if (target.dimension() != (std::size_t{1} << width))
    throw ArgumentError("target dimension does not match width");
  return MeetInTheMiddle(target, width).run(max_len);
}

std::optional<std::vector<PrimitiveOp>>
search_min_decomposition(const GateSpec &target, unsigned max_len) {
  if (target.width() > SearchLimits::max_width)
    throw BoundsError("search supports widths 1.." +
                      std::to_string(SearchLimits::max_width) + ", got " +
                      std::to_string(target.width()));
  if (!is_bijective(target))
    throw ArgumentError("gate " + target.name() +
                        " is not bijective; no unitary realizes it");
  return search_min_sequence(ExactUnitary::permutation(target.permutation()),
                             target.width(), max_len);
}

} // namespace revram
