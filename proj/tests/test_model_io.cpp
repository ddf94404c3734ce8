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

#include <filesystem>
#include <random>

#include "support.hpp"
#include "tsr/model_io/io.hpp"
#include "tsr/model_io/mip_model.hpp"
#include "tsr/selection/selection.hpp"
#include "tsr/shortest_path/shortest_path.hpp"

namespace tsr::io {
namespace {

std::string error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceJson, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance sel = tsr::testing::random_selection(rng, 1 + rng() % 10);
    EXPECT_EQ(parse_instance(emit_instance(sel)), sel);
    const Instance g = tsr::testing::random_graph(
        rng, 2 + rng() % 5, 9, trial % 2 ? PathVariant::Relaxed : PathVariant::Simple);
    EXPECT_EQ(parse_instance(emit_instance(g)), g);
    EXPECT_EQ(emit_instance(parse_instance(emit_instance(g))), emit_instance(g));
  }
}

TEST(InstanceJson, ErrorsNameTheField) {
  EXPECT_NE(error_of("{").find("syntax"), std::string::npos);
  EXPECT_NE(error_of("[]").find("$"), std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"selection","n":2,"p":1,"first_stage_cost":[1,2],
                         "interval_lo":[0,5],"interval_hi":[1,4]})")
                .find("$.interval_lo[1]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"selection","n":2,"p":1,"first_stage_cost":[1],
                         "interval_lo":[0,0],"interval_hi":[1,1]})")
                .find("$.first_stage_cost"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"selection","n":1,"p":1,"first_stage_cost":[-1],
                         "interval_lo":[0],"interval_hi":[1]})")
                .find("$.first_stage_cost[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"knapsack","n":1,"p":1,"first_stage_cost":[1],
                         "interval_lo":[0],"interval_hi":[1]})")
                .find("$.kind"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"selection","n":1,"first_stage_cost":[1],
                         "interval_lo":[0],"interval_hi":[1]})")
                .find("$.p"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kind":"shortest_path","n":1,"first_stage_cost":[1],
                         "interval_lo":[0],"interval_hi":[1],
                         "graph":{"nodes":2,"arcs":[[0,1]],"s":0,"t":1,"variant":"odd"}})")
                .find("variant"),
            std::string::npos);
}

TEST(InstanceJson, FilesOnDisk) {
  const auto dir = std::filesystem::temp_directory_path() / "tsr_io_test";
  std::filesystem::create_directories(dir);
  const Instance inst = tsr::testing::small_selection();
  save_text(dir / "t1.json", emit_instance(inst));
  EXPECT_EQ(load_instance(dir / "t1.json"), inst);
  EXPECT_THROW(load_instance(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Certificate, RoundTrip) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = tsr::testing::random_selection(rng, 1 + rng() % 8);
    const BinaryVector x = tsr::testing::random_subset(rng, inst.size(), inst.selection().p);
    const auto cert = selection::max_regret(inst, x);
    const auto back = parse_certificate(inst, write_certificate(inst, cert));
    EXPECT_EQ(back.value, cert.value);
    EXPECT_EQ(back.first_stage, cert.first_stage);
    EXPECT_EQ(back.witness, cert.witness);
    EXPECT_EQ(back.worst_scenario, cert.worst_scenario);
    EXPECT_EQ(back.best_recourse, cert.best_recourse);
  }
}

TEST(Certificate, RejectsMismatch) {
  const Instance inst = tsr::testing::small_selection();
  const auto cert = selection::max_regret(inst, tsr::testing::bits("0110"));
  std::string text = write_certificate(inst, cert);
  EXPECT_THROW(parse_certificate(inst, "{"), InputError);
  const auto other = make_selection_instance({1}, {0}, {1}, 1);
  EXPECT_THROW(parse_certificate(other, text), InputError);
}

TEST(LpExport, GoldenSmallModel) {
  MIPModel m;
  m.name = "demo";
  m.notes.push_back("two variables");
  const auto x = m.add_binary("x");
  const auto y = m.add_continuous("y", std::nullopt, std::nullopt);
  const auto w = m.add_continuous("w", Cost{2}, Cost{5});
  m.objective = {{x, 3}, {y, -1}, {w, 0}};
  m.objective_constant = 7;
  m.add_row("r1", {{x, 1}, {y, 2}}, RowSense::LessEqual, 4);
  m.add_row("r2", {{y, -1}}, RowSense::GreaterEqual, -3);
  m.add_row("r3", {{w, 1}, {x, -2}}, RowSense::Equal, 0);
  EXPECT_EQ(export_lp(m),
            "\\ demo\n"
            "\\ two variables\n"
            "Minimize\n"
            " obj: 3 x - 1 y + 0 w + 7\n"
            "Subject To\n"
            " r1: 1 x + 2 y <= 4\n"
            " r2: -1 y >= -3\n"
            " r3: 1 w - 2 x = 0\n"
            "Bounds\n"
            " y free\n"
            " 2 <= w <= 5\n"
            "Binary\n"
            " x\n"
            "End\n");
}

TEST(LpExport, WrapsLongRowsAndOmitsEmptyBlocks) {
  MIPModel m;
  m.sense = ObjectiveSense::Maximize;
  std::vector<Term> terms;
  for (int i = 0; i < 12; ++i) terms.push_back({m.add_binary("b" + std::to_string(i)), 1});
  m.objective = terms;
  const std::string lp = export_lp(m);
  EXPECT_EQ(lp.find("Subject To"), std::string::npos);
  EXPECT_EQ(lp.find("Bounds"), std::string::npos);
  EXPECT_NE(lp.find("+ 1 b9\n    + 1 b10"), std::string::npos);
}

TEST(LpExport, Validation) {
  MIPModel m;
  m.add_binary("x");
  m.add_binary("x");
  EXPECT_THROW(m.validate(), InputError);
  MIPModel d;
  d.add_binary("x");
  d.add_row("bad", {{5, 1}}, RowSense::LessEqual, 0);
  EXPECT_THROW(export_lp(d), InputError);
  EXPECT_THROW(d.index_of("nope"), InputError);
}

TEST(Adversarial, ModelShape) {
  const Instance inst = tsr::testing::small_selection();
  const auto x = tsr::testing::bits("0100");
  std::vector<BinaryVector> ys = {tsr::testing::bits("0011"), tsr::testing::bits("1010")};
  const auto m = build_adversarial_mip(inst, x, ys);
  EXPECT_EQ(m.sense, ObjectiveSense::Maximize);
  std::size_t y_rows = 0;
  for (const auto& r : m.rows) y_rows += r.name.rfind("y", 0) == 0 ? 1 : 0;
  EXPECT_EQ(y_rows, 2u);
  EXPECT_NO_THROW(m.validate());

  const auto open = build_adversarial_mip(inst, x, {});
  EXPECT_NE(std::find(open.notes.begin(), open.notes.end(), std::string(kUnboundedNote)),
            open.notes.end());
  EXPECT_THROW(build_adversarial_mip(sp::gen_diamond(PathVariant::Simple), BinaryVector(4), ys),
               InputError);
}

}  // namespace
}  // namespace tsr::io
