// Copyright 2026 The tsregret Authors
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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsr {

// Money units. Nonnegative by instance validation; every cost entering an
// Instance is bounded by kMaxCost so sums over at most kMaxElements items
// stay far below the int64 range.
using Cost = std::int64_t;

inline constexpr Cost kMaxCost = Cost{1} << 40;
inline constexpr std::size_t kMaxElements = std::size_t{1} << 16;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input.
class InputError : public Error {
 public:
  using Error::Error;
};

// No completion exists (x outside X', disconnected graph, ...).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search exceeded its explicit budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

Cost checked_add(Cost a, Cost b);
Cost checked_sub(Cost a, Cost b);
Cost checked_mul(Cost a, Cost b);

// [a - b]_+ on integers.
constexpr Cost positive_part(Cost a, Cost b) { return a > b ? a - b : 0; }

// A 0/1 vector over the ground set. Used for first-stage solutions,
// recourse actions and both halves of a two-stage pair.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t n) : bits_(n, 0) {}

  static BinaryVector from_indices(std::size_t n, std::span<const std::size_t> idx);
  // Parses "0110"; throws InputError on any other character.
  static BinaryVector parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value = true) { bits_[i] = value ? 1 : 0; }

  std::size_t count() const;
  std::vector<std::size_t> indices() const;
  std::string to_string() const;
  std::span<const std::uint8_t> data() const { return bits_; }

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
  friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// sum_i c_i x_i with overflow checks.
Cost dot(std::span<const Cost> c, const BinaryVector& x);

struct Interval {
  Cost lo = 0;
  Cost hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct UncertaintySet {
  std::vector<Interval> intervals;
};

// A realized second-stage cost vector.
struct Scenario {
  std::vector<Cost> costs;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// (u, v) in Z: u bought in stage one, v in stage two.
struct TwoStagePair {
  BinaryVector u;
  BinaryVector v;
  friend bool operator==(const TwoStagePair&, const TwoStagePair&) = default;
  friend auto operator<=>(const TwoStagePair&, const TwoStagePair&) = default;
};

struct RegretCertificate {
  Cost value = 0;
  BinaryVector first_stage;
  TwoStagePair witness;
  Scenario worst_scenario;
  BinaryVector best_recourse;
};

}  // namespace tsr
