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

// End-to-end checks of the tsr executable: exit codes, outputs and
// determinism.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tsr/model_io/io.hpp"
#include "tsr/oracle/oracle.hpp"
#include "tsr/structures.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(TSR_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TSR_DATA_DIR) + "/" + name; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tsr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, SolveSmallSelection) {
  const auto exact = run("solve " + data("small_selection.json") + " --method exact");
  EXPECT_EQ(exact.code, 0);
  EXPECT_NE(exact.out.find("value: 2\n"), std::string::npos);
  EXPECT_NE(exact.out.find("x: 0110\n"), std::string::npos);

  const auto greedy = run("solve " + data("small_selection.json") + " --method greedy");
  EXPECT_EQ(greedy.code, 0);
  EXPECT_NE(greedy.out.find("value: 2\n"), std::string::npos);

  const auto seeded = run("solve " + data("small_selection.json") + " --method greedy --seed-cut 1");
  EXPECT_NE(seeded.out.find("value: 4\n"), std::string::npos);

  const auto mid = run("solve " + data("small_selection.json") + " --method midpoint");
  EXPECT_EQ(mid.code, 0);
  EXPECT_NE(mid.out.find("gap: "), std::string::npos);
  EXPECT_NE(mid.out.find("oracle_value: 2\n"), std::string::npos);

  const auto colgen = run("solve " + data("small_selection.json") + " --method colgen --trace", true);
  EXPECT_EQ(colgen.code, 0);
  EXPECT_NE(colgen.out.find("1\t"), std::string::npos);
  EXPECT_NE(colgen.out.find("value: 2\n"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("solve " + data("small_selection.json") + " --method pn").code, 2);
  EXPECT_EQ(run("solve " + data("small_selection.json") + " --method nope").code, 2);
  EXPECT_EQ(run("solve " + tmp("missing.json")).code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("regret " + data("small_selection.json") + " --x 01x0").code, 2);
  EXPECT_EQ(run("regret " + data("small_selection.json") + " --x 011").code, 2);
  EXPECT_EQ(run("regret " + data("small_selection.json") + " --x 1111").code, 3);
  EXPECT_EQ(run("solve " + data("random_selection_4.json") + " --method exact --budget 1").code, 4);
  EXPECT_EQ(run("regret " + data("random_selection_4.json") + " --x 000000000 --method enum --budget 3")
                .code,
            4);
  EXPECT_EQ(run("gen --family partition-tstr --a 1,2").code, 2);
  EXPECT_EQ(run("gen --family partition-tstr --a 1,zz").code, 2);
  EXPECT_EQ(run("export " + data("small_selection.json") + " --model adversarial").code, 2);
  EXPECT_EQ(run("export " + data("diamond_simple.json") + " --model p-pi --pi 1,2").code, 2);
  EXPECT_EQ(run("bench " + dir_.string()).code, 2);
}

TEST_F(Cli, RegretAndCertificate) {
  const auto r = run("regret " + data("small_selection.json") + " --x 0110 --method fast --cert " + tmp("c.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value: 2\n"), std::string::npos);
  const tsr::Instance inst = tsr::io::load_instance(data("small_selection.json"));
  const auto cert = tsr::io::parse_certificate(inst, read_file(tmp("c.json")));
  EXPECT_EQ(cert.value, 2);
  EXPECT_EQ(cert.first_stage.to_string(), "0110");
}

TEST_F(Cli, FastAndOracleAgreeOnRandomBatch) {
  for (int seed = 1; seed <= 15; ++seed) {
    const std::string file = tmp("r" + std::to_string(seed) + ".json");
    ASSERT_EQ(run("gen --family random-selection --n 7 --p 3 --seed " + std::to_string(seed) +
                  " --out " + file)
                  .code,
              0);
    for (const char* x : {"0000000", "1010000", "0001011"}) {
      const auto fast = run("regret " + file + " --x " + x + " --method fast --no-time");
      const auto brute = run("regret " + file + " --x " + x + " --method oracle --no-time");
      ASSERT_EQ(fast.code, 0);
      const auto value_line = [](const std::string& s) { return s.substr(s.find("value: "), s.find('\n', s.find("value: ")) - s.find("value: ")); };
      EXPECT_EQ(value_line(fast.out), value_line(brute.out)) << file << " " << x;
    }
  }
}

TEST_F(Cli, GeneratorsAreDeterministic) {
  for (const std::string family : {"random-selection --n 9", "random-sp --nodes 5 --arcs 8"}) {
    ASSERT_EQ(run("gen --family " + family + " --seed 7 --out " + tmp("a.json")).code, 0);
    ASSERT_EQ(run("gen --family " + family + " --seed 7 --out " + tmp("b.json")).code, 0);
    ASSERT_EQ(run("gen --family " + family + " --seed 8 --out " + tmp("c.json")).code, 0);
    EXPECT_EQ(read_file(tmp("a.json")), read_file(tmp("b.json")));
    EXPECT_NE(read_file(tmp("a.json")), read_file(tmp("c.json")));
  }
  const auto a = run("solve " + data("small_selection.json") + " --method colgen --no-time");
  const auto b = run("solve " + data("small_selection.json") + " --method colgen --no-time");
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, PartitionRegretGadget) {
  ASSERT_EQ(run("gen --family partition-regret --a 1,1 --out " + tmp("p.json")).code, 0);
  const auto r = run("regret " + tmp("p.json") + " --x 0000 --method fast");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value: 1\n"), std::string::npos);
}

tsr::Cost field_value(const std::string& text, const std::string& key) {
  const auto at = text.find(key + ": ");
  if (at == std::string::npos) return -1;
  return std::stoll(text.substr(at + key.size() + 2));
}

TEST_F(Cli, PartitionTstrThreshold) {
  for (const auto& [a, yes] : {std::pair{"1,1", true}, {"1,3", false}, {"1,2,3", true}}) {
    const auto g = run(std::string("gen --family partition-tstr --a ") + a + " --out " + tmp("t.json"));
    ASSERT_EQ(g.code, 0) << a;
    const tsr::Cost threshold = field_value(g.out, "threshold");
    const auto s = run("solve " + tmp("t.json") + " --method exact");
    ASSERT_EQ(s.code, 0) << a;
    EXPECT_EQ(field_value(s.out, "value") <= threshold, yes) << a << " threshold " << threshold;
  }
}

TEST_F(Cli, MidpointGapFamily) {
  ASSERT_EQ(run("gen --family midpoint-gap --ratio 100 --seed 1 --out " + tmp("m.json")).code, 0);
  const tsr::Instance inst = tsr::io::load_instance(tmp("m.json"));
  EXPECT_EQ(inst, tsr::io::load_instance(data("midpoint_gap.json")));
}

TEST_F(Cli, Export) {
  const auto ppi = run("export " + data("small_selection.json") + " --model p-pi --pi 2,6");
  EXPECT_EQ(ppi.code, 0);
  std::size_t zrows = 0;
  for (std::size_t at = ppi.out.find(" zrow_"); at != std::string::npos;
       at = ppi.out.find(" zrow_", at + 1)) {
    ++zrows;
  }
  EXPECT_EQ(zrows, 7u);
  EXPECT_NE(ppi.out.find("5 x_1 + 0 x_2 + 3 x_3 + 11 x_4 - 1 z <= 2"), std::string::npos);

  ASSERT_EQ(run("export " + data("small_selection.json") + " --model compact-selection --out " + tmp("c.lp")).code, 0);
  const std::string lp = read_file(tmp("c.lp"));
  EXPECT_EQ(lp.rfind("End\n"), lp.size() - 4);
  EXPECT_NE(lp.find("Binary\n x_1\n"), std::string::npos);

  const auto adv = run("export " + data("small_selection.json") + " --model adversarial --x 0100");
  EXPECT_EQ(adv.code, 0);
  EXPECT_NE(adv.out.find("Maximize"), std::string::npos);
}

TEST_F(Cli, BenchSuite) {
  const auto r = run("bench " + std::string(TSR_DATA_DIR) +
                     " --methods exact,colgen,greedy,midpoint --oracle --out " + tmp("b.csv"));
  ASSERT_EQ(r.code, 0);
  std::istringstream csv(read_file(tmp("b.csv")));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "instance,method,status,value,x,time_ms,oracle_value,gap,ratio");
  std::size_t rows = 0, exact_rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    f.resize(9);
    if (f[2] != "ok" || f[6].empty()) continue;
    if (f[1] == "exact" || f[1] == "colgen") {
      ++exact_rows;
      EXPECT_EQ(f[7], "0") << line;
    }
    if (f[1] == "greedy") EXPECT_TRUE(f[8] == "inf" || std::stod(f[8]) >= 1.0) << line;
  }
  EXPECT_GT(rows, 10u);
  EXPECT_GT(exact_rows, 10u);

  // A directory whose only file is unreadable.
  std::ofstream(tmp("junk.json")) << "{ not json";
  const auto junk = run("bench " + dir_.string(), true);
  EXPECT_EQ(junk.code, 2);
  EXPECT_NE(junk.out.find("warning"), std::string::npos);
}

}  // namespace
