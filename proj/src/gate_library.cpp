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

#include "revram/gate_library.hpp"

#include "revram/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>

namespace revram {

std::string to_string(const PrimitiveOp &op) {
  switch (op.kind) {
  case PrimitiveKind::Not:
    return "NOT(" + std::to_string(op.target) + ")";
  case PrimitiveKind::Cnot:
    return "CNOT(" + std::to_string(op.control.value_or(0)) + "->" +
           std::to_string(op.target) + ")";
  case PrimitiveKind::Cv:
    return "CV(" + std::to_string(op.control.value_or(0)) + "->" +
           std::to_string(op.target) + ")";
  case PrimitiveKind::CvDag:
    return "CVDAG(" + std::to_string(op.control.value_or(0)) + "->" +
           std::to_string(op.target) + ")";
  }
  return "?";
}

unsigned primitive_depth(std::span<const PrimitiveOp> ops, unsigned width) {
  std::vector<unsigned> ready(width, 0);
  unsigned depth = 0;
  for (const auto &op : ops) {
    unsigned start = ready.at(op.target);
    if (op.control)
      start = std::max(start, ready.at(*op.control));
    ready[op.target] = start + 1;
    if (op.control)
      ready[*op.control] = start + 1;
    depth = std::max(depth, start + 1);
  }
  return depth;
}

GateSpec::GateSpec(std::string name, std::string mnemonic, unsigned width,
                   std::vector<std::uint32_t> permutation,
                   unsigned quantum_cost,
                   std::optional<std::vector<PrimitiveOp>> decomposition)
    : name_(std::move(name)), mnemonic_(std::move(mnemonic)), width_(width),
      permutation_(std::move(permutation)), quantum_cost_(quantum_cost),
      delay_(quantum_cost), decomposition_(std::move(decomposition)) {
  if (width_ == 0 || width_ > 24)
    throw ArgumentError("gate " + name_ + ": width must be in [1, 24]");
  const std::size_t rows = std::size_t{1} << width_;
  if (permutation_.size() != rows)
    throw ArgumentError("gate " + name_ + ": table has " +
                        std::to_string(permutation_.size()) +
                        " entries, expected " + std::to_string(rows));
  for (auto out : permutation_)
    if (out >= rows)
      throw ArgumentError("gate " + name_ + ": table entry out of range");
  if (decomposition_) {
    for (const auto &op : *decomposition_) {
      const bool bad_control =
          op.control && (*op.control >= width_ || *op.control == op.target);
      if (op.target >= width_ || bad_control)
        throw ArgumentError("gate " + name_ + ": decomposition op " +
                            to_string(op) + " is out of range");
    }
    delay_ = primitive_depth(*decomposition_, width_);
  }
}

std::uint32_t pack_bits(std::span<const std::uint8_t> bits) {
  std::uint32_t pattern = 0;
  for (auto b : bits)
    pattern = (pattern << 1) | (b & 1u);
  return pattern;
}

BitVector unpack_bits(std::uint32_t pattern, unsigned width) {
  BitVector bits(width);
  for (unsigned i = 0; i < width; ++i)
    bits[i] = (pattern >> (width - 1 - i)) & 1u;
  return bits;
}

namespace {

using Fn3 = std::function<std::array<bool, 3>(bool, bool, bool)>;

std::vector<std::uint32_t> table3(const Fn3 &fn) {
  std::vector<std::uint32_t> table(8);
  for (std::uint32_t i = 0; i < 8; ++i) {
    const auto [p, q, r] = fn(i & 4, i & 2, i & 1);
    table[i] = (std::uint32_t(p) << 2) | (std::uint32_t(q) << 1) | r;
  }
  return table;
}

GateRef make(std::string name, std::string mnemonic, unsigned width,
             std::vector<std::uint32_t> table, unsigned cost,
             std::optional<std::vector<PrimitiveOp>> ops = {}) {
  return std::make_shared<const GateSpec>(std::move(name), std::move(mnemonic),
                                          width, std::move(table), cost,
                                          std::move(ops));
}

struct Catalog {
  std::vector<GateRef> gates;

  Catalog() {
    gates.push_back(make("NOT", "not", 1, {1, 0}, 1, {{not_op(0)}}));
    gates.push_back(make("FG", "fg", 2, {0, 1, 3, 2}, 1, {{cnot(0, 1)}}));
    gates.push_back(make("DFG", "dfg", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{a, a != b, a != c};
                         }),
                         2, {{cnot(0, 1), cnot(0, 2)}}));
    gates.push_back(make("TG", "t3", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{a, b, (a && b) != c};
                         }),
                         5,
                         {{cv(1, 2), cnot(0, 1), cvdag(1, 2), cnot(0, 1),
                           cv(0, 2)}}));
    gates.push_back(make("FRG", "f3", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{a, a ? c : b, a ? b : c};
                         }),
                         5));
    gates.push_back(make("PG", "p3", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{a, a != b, (a && b) != c};
                         }),
                         4, {{cv(1, 2), cv(0, 2), cnot(0, 1), cvdag(1, 2)}}));
    // Q = !A&B ^ C rather than the printed !A&B ^ !A&C, which is not
    // injective. R and the C=0 slice (Q, R) = (!A&B, A&B) are unchanged.
    gates.push_back(make("MFRG1", "mf1", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{a, (!a && b) != c,
                                             (!a && c) != (a && b)};
                         }),
                         4));
    gates.push_back(make("MFRG2", "mf2", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{!a, (!a && b) != c,
                                             (!a && c) != (a && b)};
                         }),
                         5));
    gates.push_back(make("MFRG1_PRINTED", "mf1p", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{a, (!a && b) != (!a && c),
                                             (!a && c) != (a && b)};
                         }),
                         4));
    gates.push_back(make("MFRG2_PRINTED", "mf2p", 3,
                         table3([](bool a, bool b, bool c) {
                           return std::array{!a, (!a && b) != (!a && c),
                                             (!a && c) != (a && b)};
                         }),
                         5));
  }
};

const Catalog &catalog() {
  static const Catalog instance;
  return instance;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto &ch : out)
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

} // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto &g : catalog().gates)
    names.push_back(g->name());
  return names;
}

GateRef feynman_fanin(unsigned controls) {
  if (controls == 0 || controls > 20)
    throw ArgumentError("feynman fan-in gate needs 1..20 controls, got " +
                        std::to_string(controls));
  if (controls == 1)
    return builtin_gate("FG");

  static std::mutex mutex;
  static std::map<unsigned, GateRef> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(controls); it != cache.end())
    return it->second;

  const unsigned width = controls + 1;
  std::vector<std::uint32_t> table(std::size_t{1} << width);
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    const auto parity = std::uint32_t(__builtin_popcount(i >> 1) & 1);
    table[i] = i ^ parity;
  }
  std::vector<PrimitiveOp> ops;
  for (unsigned c = 0; c < controls; ++c)
    ops.push_back(cnot(c, controls));
  auto gate = make("FG" + std::to_string(width), "fg" + std::to_string(width),
                   width, std::move(table), controls, std::move(ops));
  cache.emplace(controls, gate);
  return gate;
}

GateRef builtin_gate(std::string_view name) {
  const auto key = lower(name);
  for (const auto &g : catalog().gates)
    if (lower(g->name()) == key || g->mnemonic() == key)
      return g;
  if (key.size() > 2 && key.starts_with("fg") &&
      std::all_of(key.begin() + 2, key.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const auto width = std::stoul(key.substr(2));
    if (width >= 2 && width <= 21)
      return feynman_fanin(static_cast<unsigned>(width - 1));
  }
  throw CatalogError("unknown gate '" + std::string(name) + "'");
}

GateRef gate_from_table(std::string name, unsigned width,
                        std::vector<std::uint32_t> table,
                        unsigned quantum_cost) {
  auto mnemonic = lower(name);
  return make(std::move(name), std::move(mnemonic), width, std::move(table),
              quantum_cost);
}

bool is_bijective(const GateSpec &spec) {
  std::vector<bool> seen(spec.permutation().size(), false);
  for (auto out : spec.permutation()) {
    if (seen[out])
      return false;
    seen[out] = true;
  }
  return true;
}

BitVector apply_gate(const GateSpec &spec, std::span<const std::uint8_t> input) {
  if (input.size() != spec.width())
    throw ArgumentError("gate " + spec.name() + " expects " +
                        std::to_string(spec.width()) + " bits, got " +
                        std::to_string(input.size()));
  for (auto b : input)
    if (b > 1)
      throw ArgumentError("bit values must be 0 or 1");
  return unpack_bits(spec.apply(pack_bits(input)), spec.width());
}

std::vector<std::uint32_t> inverse_table(const GateSpec &spec) {
  if (!is_bijective(spec))
    throw ArgumentError("gate " + spec.name() + " is not bijective");
  std::vector<std::uint32_t> inv(spec.permutation().size());
  for (std::uint32_t i = 0; i < inv.size(); ++i)
    inv[spec.permutation()[i]] = i;
  return inv;
}

} // namespace revram
