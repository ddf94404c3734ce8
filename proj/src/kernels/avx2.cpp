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

// Compiled with -mavx2. Only reached through the dispatcher after a CPUID
// check, so nothing here may run on its own at static-init time.

#include <immintrin.h>

#include <algorithm>
#include <cstring>

#include "tsr/kernels/kernels.hpp"

namespace tsr::kernels::avx2 {
namespace {

inline __m256i load(const Cost* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Cost* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// AVX2 has no 64-bit min/max; build them from the signed compare.
inline __m256i min64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b));
}

inline __m256i max64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(b, a));
}

inline Cost hsum(__m256i v) {
  alignas(32) Cost lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline Cost hmax(__m256i v) {
  alignas(32) Cost lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

// Four 0/1 bytes widened to four 64-bit lanes, all-ones where nonzero.
inline __m256i byte_mask(const std::uint8_t* p) {
  std::int32_t raw;
  std::memcpy(&raw, p, sizeof(raw));
  const __m256i wide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(raw));
  return _mm256_cmpgt_epi64(wide, _mm256_setzero_si256());
}

}  // namespace

Cost recourse_costs(Cost alpha, std::span<const Cost> lo, std::span<const Cost> hi,
                    std::span<const Cost> first, std::span<const std::uint8_t> in_x,
                    std::span<Cost> out) {
  const std::size_t n = out.size();
  const __m256i va = _mm256_set1_epi64x(alpha);
  const __m256i zero = _mm256_setzero_si256();
  __m256i excess = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vlo = load(lo.data() + i);
    const __m256i vhi = load(hi.data() + i);
    const __m256i vc = load(first.data() + i);
    const __m256i inx = byte_mask(in_x.data() + i);

    const __m256i clamped = max64(vlo, min64(va, vhi));
    const __m256i hat = _mm256_blendv_epi8(clamped, vlo, inx);
    store(out.data() + i, min64(vc, hat));

    const __m256i over = _mm256_sub_epi64(va, vhi);
    const __m256i pos = _mm256_and_si256(over, _mm256_cmpgt_epi64(over, zero));
    excess = _mm256_add_epi64(excess, _mm256_andnot_si256(inx, pos));
  }
  Cost total = hsum(excess);
  for (; i < n; ++i) {
    const Cost hat = in_x[i] ? lo[i] : std::max(lo[i], std::min(alpha, hi[i]));
    out[i] = std::min(first[i], hat);
    if (!in_x[i]) total += positive_part(alpha, hi[i]);
  }
  return total;
}

void accumulate(std::span<Cost> acc, std::span<const Cost> row) {
  const std::size_t n = acc.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    store(acc.data() + k, _mm256_add_epi64(load(acc.data() + k), load(row.data() + k)));
  }
  for (; k < n; ++k) acc[k] += row[k];
}

Cost max_value(std::span<const Cost> values) {
  const std::size_t n = values.size();
  if (n < 4) return *std::max_element(values.begin(), values.end());
  __m256i best = load(values.data());
  std::size_t k = 4;
  for (; k + 4 <= n; k += 4) best = max64(best, load(values.data() + k));
  Cost result = hmax(best);
  for (; k < n; ++k) result = std::max(result, values[k]);
  return result;
}

}  // namespace tsr::kernels::avx2
