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


#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "support.hpp"
#include "tsr/kernels/kernels.hpp"
#include "tsr/selection/profiles.hpp"
#include "tsr/selection/selection.hpp"

namespace tsr {
namespace {

struct Lanes {
  std::vector<Cost> lo, hi, first;
  std::vector<std::uint8_t> in_x;
};

Lanes random_lanes(std::mt19937_64& rng, std::size_t n, Cost max_cost) {
  std::uniform_int_distribution<Cost> value(0, max_cost);
  Lanes l;
  for (std::size_t i = 0; i < n; ++i) {
    Cost a = value(rng), b = value(rng);
    l.lo.push_back(std::min(a, b));
    l.hi.push_back(std::max(a, b));
    l.first.push_back(value(rng));
    l.in_x.push_back(static_cast<std::uint8_t>(rng() % 3 == 0));
  }
  return l;
}

TEST(Kernels, ScalarRecourseCostsDefinition) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng() % 40;
    const Lanes l = random_lanes(rng, n, 50);
    const Cost alpha = static_cast<Cost>(rng() % 60);
    std::vector<Cost> out(n);
    const Cost excess = kernels::scalar::recourse_costs(alpha, l.lo, l.hi, l.first, l.in_x, out);
    Cost expect_excess = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Cost modified = l.in_x[i] ? l.lo[i]
                                      : l.lo[i] + positive_part(alpha, l.lo[i]) -
                                            positive_part(alpha, l.hi[i]);
      EXPECT_EQ(out[i], std::min(l.first[i], modified));
      if (!l.in_x[i]) expect_excess += positive_part(alpha, l.hi[i]);
    }
    EXPECT_EQ(excess, expect_excess);
  }
}

#if defined(TSR_HAVE_AVX2)

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!kernels::isa_available(kernels::Isa::Avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  }
};

TEST_F(Avx2Equivalence, RecourseCosts) {
  std::mt19937_64 rng(2);
  for (std::size_t n = 0; n < 70; ++n) {
    for (Cost max_cost : {Cost{5}, Cost{1000}, kMaxCost}) {
      const Lanes l = random_lanes(rng, n, max_cost);
      std::uniform_int_distribution<Cost> pick(0, max_cost);
      for (int rep = 0; rep < 4; ++rep) {
        const Cost alpha = pick(rng);
        std::vector<Cost> a(n, -1), b(n, -2);
        const Cost ea = kernels::scalar::recourse_costs(alpha, l.lo, l.hi, l.first, l.in_x, a);
        const Cost eb = kernels::avx2::recourse_costs(alpha, l.lo, l.hi, l.first, l.in_x, b);
        EXPECT_EQ(ea, eb);
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST_F(Avx2Equivalence, AccumulateAndMax) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Cost> value(-kMaxCost, kMaxCost);
  for (std::size_t n = 1; n < 70; ++n) {
    std::vector<Cost> acc(n), row(n);
    for (auto& v : acc) v = value(rng);
    for (auto& v : row) v = value(rng);
    std::vector<Cost> a = acc, b = acc;
    kernels::scalar::accumulate(a, row);
    kernels::avx2::accumulate(b, row);
    EXPECT_EQ(a, b);
    EXPECT_EQ(kernels::scalar::max_value(a), kernels::avx2::max_value(a));
    // All-negative input and a maximum in the tail.
    std::vector<Cost> neg(n, -kMaxCost);
    neg[n - 1] = -3;
    EXPECT_EQ(kernels::avx2::max_value(neg), -3);
  }
}

TEST_F(Avx2Equivalence, SelectionRegretUnderBothIsas) {
  std::mt19937_64 rng(4);
  const kernels::Isa before = kernels::active_isa();
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = testing::random_selection(rng, 1 + rng() % 60, 1000);
    const BinaryVector x = testing::random_subset(rng, inst.size(), inst.selection().p);
    kernels::set_isa(kernels::Isa::Scalar);
    const auto a = selection::max_regret(inst, x);
    kernels::set_isa(kernels::Isa::Avx2);
    const auto b = selection::max_regret(inst, x);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);

    const auto profiles = selection::enumerate_pi_profiles(inst);
    const auto table = selection::coefficients(inst, profiles[rng() % profiles.size()]);
    kernels::set_isa(kernels::Isa::Scalar);
    const Cost fa = selection::eval_F(table, x);
    kernels::set_isa(kernels::Isa::Avx2);
    const Cost fb = selection::eval_F(table, x);
    EXPECT_EQ(fa, fb);
  }
  kernels::set_isa(before);
}

#endif

TEST(Kernels, DispatchReportsIsa) {
  EXPECT_TRUE(kernels::isa_available(kernels::Isa::Scalar));
  const kernels::Isa before = kernels::active_isa();
  kernels::set_isa(kernels::Isa::Scalar);
  EXPECT_EQ(kernels::active_isa(), kernels::Isa::Scalar);
  EXPECT_STREQ(kernels::isa_name(kernels::Isa::Scalar), "scalar");
  if (!kernels::isa_available(kernels::Isa::Avx2)) {
    EXPECT_THROW(kernels::set_isa(kernels::Isa::Avx2), Error);
  }
  kernels::set_isa(before);
}

}  // namespace
}  // namespace tsr
