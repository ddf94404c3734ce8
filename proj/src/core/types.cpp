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

#include "tsr/core/types.hpp"

#include <algorithm>

namespace tsr {

Cost checked_add(Cost a, Cost b) {
  Cost r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("cost arithmetic overflow (add)");
  return r;
}

Cost checked_sub(Cost a, Cost b) {
  Cost r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("cost arithmetic overflow (sub)");
  return r;
}

Cost checked_mul(Cost a, Cost b) {
  Cost r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("cost arithmetic overflow (mul)");
  return r;
}

BinaryVector BinaryVector::from_indices(std::size_t n, std::span<const std::size_t> idx) {
  BinaryVector v(n);
  for (std::size_t i : idx) {
    if (i >= n) throw InputError("index " + std::to_string(i) + " out of range");
    v.set(i);
  }
  return v;
}

BinaryVector BinaryVector::parse(std::string_view text) {
  BinaryVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw InputError("malformed bit string '" + std::string(text) + "'");
    }
  }
  return v;
}

std::size_t BinaryVector::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> BinaryVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

std::string BinaryVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

Cost dot(std::span<const Cost> c, const BinaryVector& x) {
  Cost total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) total = checked_add(total, c[i]);
  }
  return total;
}

}  // namespace tsr
