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

#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "tsr/kernels/kernels.hpp"

namespace tsr::kernels {
namespace {

struct Table {
  Cost (*recourse_costs)(Cost, std::span<const Cost>, std::span<const Cost>,
                         std::span<const Cost>, std::span<const std::uint8_t>, std::span<Cost>);
  void (*accumulate)(std::span<Cost>, std::span<const Cost>);
  Cost (*max_value)(std::span<const Cost>);
};

constexpr Table kScalar{&scalar::recourse_costs, &scalar::accumulate, &scalar::max_value};
#if defined(TSR_HAVE_AVX2)
constexpr Table kAvx2{&avx2::recourse_costs, &avx2::accumulate, &avx2::max_value};
#endif

const Table& table_for(Isa isa) {
#if defined(TSR_HAVE_AVX2)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

Isa detect() {
  if (const char* env = std::getenv("TSR_ISA"); env && std::string_view(env) == "scalar") {
    return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(TSR_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw Error(std::string("kernel ISA '") + isa_name(isa) + "' is not available");
  }
  current().store(isa, std::memory_order_relaxed);
}

Cost recourse_costs(Cost alpha, std::span<const Cost> lo, std::span<const Cost> hi,
                    std::span<const Cost> first, std::span<const std::uint8_t> in_x,
                    std::span<Cost> out) {
  return table_for(active_isa()).recourse_costs(alpha, lo, hi, first, in_x, out);
}

void accumulate(std::span<Cost> acc, std::span<const Cost> row) {
  table_for(active_isa()).accumulate(acc, row);
}

Cost max_value(std::span<const Cost> values) {
  return table_for(active_isa()).max_value(values);
}

}  // namespace tsr::kernels
