// Copyright 2026 The hbkit Authors
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
#include <fstream>
#include <sstream>

#include "hbkit/cli.hpp"
#include "hbkit/constructions.hpp"
#include "hbkit/edge_list.hpp"
#include "hbkit/family.hpp"
#include "hbkit/isometry.hpp"
#include "json.hpp"

namespace hbkit {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hbkit_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                              ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const Graph& g) {
    const std::string p = Path(name);
    std::ofstream(p) << FormatEdgeList(g, {});
    return p;
  }

  int Run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  static std::string Slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenerateKingGrid) {
  const std::string p = Path("king.txt");
  ASSERT_EQ(Run({"generate", "--family", "king", "--p", "3", "--q", "3", "-o", p}),
            kExitOk);
  const auto doc = ReadEdgeListFile(p);
  EXPECT_EQ(doc.graph.num_vertices(), 9);
  EXPECT_EQ(doc.graph.num_edges(), 20);
}

TEST_F(CliTest, GenerateSunWithAnnotations) {
  const std::string p = Path("h3.txt");
  ASSERT_EQ(Run({"generate", "--family", "h3", "--k", "0", "-o", p}), kExitOk);
  const auto doc = ReadEdgeListFile(p);
  EXPECT_EQ(doc.graph.num_vertices(), 8);
  EXPECT_TRUE(AreIsomorphic(doc.graph, BuildObstruction(Family::kH3, 0).graph));
  EXPECT_EQ(doc.annotations, FamilyAnnotations(BuildObstruction(Family::kH3, 0)));
}

TEST_F(CliTest, GenerateRandomHullIsDeterministic) {
  const std::vector<std::string> base{"generate", "--family", "random-hull",
                                      "--n", "7", "--prob", "0.4", "--seed", "1",
                                      "-o"};
  auto a = base;
  a.push_back(Path("a.txt"));
  auto b = base;
  b.push_back(Path("b.txt"));
  ASSERT_EQ(Run(a), kExitOk);
  ASSERT_EQ(Run(b), kExitOk);
  EXPECT_EQ(Slurp(Path("a.txt")), Slurp(Path("b.txt")));
  EXPECT_FALSE(Slurp(Path("a.txt")).empty());
}

TEST_F(CliTest, GenerateRejectsBadParameters) {
  EXPECT_EQ(Run({"generate", "--family", "h1", "--k", "0"}), kExitInputError);
  EXPECT_EQ(Run({"generate", "--family", "nope", "--k", "1"}), kExitInputError);
  EXPECT_EQ(Run({"generate", "--family", "king", "--p", "0", "--q", "2"}),
            kExitInputError);
}

TEST_F(CliTest, AnalyzeSunReport) {
  const std::string in = Write("sun.txt", BuildObstruction(Family::kH3, 0).graph);
  const std::string js = Path("r.json");
  ASSERT_EQ(Run({"analyze", in, "--json", js}), kExitOk);
  const json r = json::parse(Slurp(js));
  EXPECT_EQ(r["hb_doubled"], 2);
  EXPECT_EQ(r["tau"], 1);
  EXPECT_EQ(r["is_helly"], true);
  EXPECT_EQ(r["consistent"], true);
  EXPECT_EQ(r["classifiers"]["agree"], true);
}

TEST_F(CliTest, AnalyzeOddCycle) {
  const std::string in = Write("c9.txt", CycleGraph(9));
  const std::string js = Path("r.json");
  ASSERT_EQ(Run({"analyze", in, "--json", js, "--no-hull"}), kExitOk);
  const json r = json::parse(Slurp(js));
  EXPECT_EQ(r["hb_doubled"], 3);
  EXPECT_EQ(r["tau"], 0);
  EXPECT_EQ(r["is_helly"], false);
  EXPECT_TRUE(r.contains("helly_witness"));
}

TEST_F(CliTest, AnalyzeReportSchema) {
  const std::string in = Write("k.txt", KingGrid(4, 4));
  const std::string js = Path("r.json");
  ASSERT_EQ(Run({"analyze", in, "--json", js}), kExitOk);
  const json r = json::parse(Slurp(js));
  for (const char* key :
       {"input", "is_helly", "is_pseudo_modular", "hb_doubled",
        "hb_witness", "tau", "tau_witness", "classifiers", "obstructions",
        "half_hyperbolic", "hull", "timing_ms", "consistent"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  for (const char* key : {"name", "n", "m", "diameter"})
    EXPECT_TRUE(r["input"].contains(key)) << key;
  for (const char* key : {"quadruple", "sums", "delta_doubled"})
    EXPECT_TRUE(r["hb_witness"].contains(key)) << key;
  for (const char* key : {"direct_doubled", "obstructions_doubled",
                          "thinness_doubled", "power_doubled", "agree"})
    EXPECT_TRUE(r["classifiers"].contains(key)) << key;
  EXPECT_TRUE(r["hb_doubled"].is_number_integer());
  // Every half-integer leaves the program doubled.
  std::function<void(const json&)> no_floats = [&](const json& j) {
    EXPECT_FALSE(j.is_number_float()) << j;
    if (j.is_structured())
      for (const auto& v : j) no_floats(v);
  };
  no_floats(r);
}

TEST_F(CliTest, AnalyzeStdoutSummaryAndDot) {
  const std::string in = Write("k.txt", KingGrid(3, 3));
  const std::string dot = Path("w.dot");
  ASSERT_EQ(Run({"analyze", in, "--dot", dot}), kExitOk);
  EXPECT_NE(out_.str().find("hb=1"), std::string::npos) << out_.str();
  EXPECT_NE(Slurp(dot).find("color=red"), std::string::npos);
}

TEST_F(CliTest, AnalyzeInputErrors) {
  const std::string bad = Path("disc.txt");
  std::ofstream(bad) << "0 1\n2 3\n";
  EXPECT_EQ(Run({"analyze", bad}), kExitInputError);
  EXPECT_NE(err_.str().find("error"), std::string::npos);
  EXPECT_EQ(Run({"analyze", Path("missing.txt")}), kExitInputError);
  const std::string junk = Path("junk.txt");
  std::ofstream(junk) << "0 x\n";
  EXPECT_EQ(Run({"analyze", junk}), kExitInputError);
  EXPECT_EQ(Run({}), kExitInputError);
}

TEST_F(CliTest, DetectExitCodes) {
  const std::string h2 = Path("h2.txt");
  ASSERT_EQ(Run({"generate", "--family", "h2", "--k", "1", "-o", h2}), kExitOk);
  EXPECT_EQ(Run({"detect", h2, "--family", "h2", "--k", "1", "--materialize"}),
            kExitOk);
  EXPECT_NE(out_.str().find("isometric=yes isomorphic=yes"), std::string::npos);
  EXPECT_EQ(Run({"detect", h2, "--family", "h2", "--k", "2"}), kExitAbsent);
  EXPECT_EQ(Run({"detect", h2, "--family", "h1", "--k", "2"}), kExitAbsent);
  EXPECT_EQ(Run({"detect", h2, "--family", "h1", "--k", "1"}), kExitOk);
  const std::string c4 = Write("c4.txt", CycleGraph(4));
  EXPECT_EQ(Run({"detect", c4, "--family", "h1", "--k", "1", "--materialize"}),
            kExitNotHelly);
  EXPECT_EQ(Run({"detect", c4, "--family", "h1", "--k", "2"}), kExitNotHelly);
  EXPECT_EQ(Run({"detect", h2, "--family", "h1", "--k", "0"}), kExitInputError);
}

TEST_F(CliTest, DetectJsonWitness) {
  const std::string sun = Write("s.txt", BuildObstruction(Family::kH3, 0).graph);
  const std::string js = Path("d.json");
  ASSERT_EQ(Run({"detect", sun, "--family", "h3", "--k", "0", "--json", js}),
            kExitOk);
  const json r = json::parse(Slurp(js));
  EXPECT_EQ(r["found"], true);
  EXPECT_EQ(r["witness"]["corners"].size(), 4u);
}

TEST_F(CliTest, PowerOfFiveCycle) {
  const std::string in = Write("c5.txt", CycleGraph(5));
  const std::string p = Path("p.txt");
  ASSERT_EQ(Run({"power", in, "--k", "2", "-o", p}), kExitOk);
  EXPECT_EQ(ReadEdgeListFile(p).graph, CompleteGraph(5));
  EXPECT_EQ(Run({"power", in, "--k", "0"}), kExitInputError);
}

TEST_F(CliTest, HullOfFourCycle) {
  const std::string in = Write("c4.txt", CycleGraph(4));
  const std::string p = Path("h.txt");
  const std::string js = Path("h.json");
  ASSERT_EQ(Run({"hull", in, "-o", p, "--json", js}), kExitOk);
  EXPECT_EQ(ReadEdgeListFile(p).graph.num_vertices(), 5);
  EXPECT_EQ(json::parse(Slurp(js))["functions"].size(), 5u);
}

TEST_F(CliTest, VerifyOnKingGrid) {
  const std::string in = Write("k.txt", KingGrid(4, 4));
  EXPECT_EQ(Run({"verify", in}), kExitOk);
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos) << out_.str();
  for (const char* label : {"thinness-window", "obstructions-integer",
                            "obstructions-half", "power-windows",
                            "even-thinness-parity",
                            "half-hyperbolic-equivalents"})
    EXPECT_NE(out_.str().find(std::string(label) + ": PASS"), std::string::npos);
}

TEST_F(CliTest, VerifySkipsOnNonHelly) {
  const std::string in = Write("c5.txt", CycleGraph(5));
  EXPECT_EQ(Run({"verify", in}), kExitNotHelly);
  EXPECT_NE(out_.str().find("SKIP"), std::string::npos);
}

TEST_F(CliTest, RoundTripFamilies) {
  for (const char* fam : {"h1", "h2", "h3"}) {
    for (int k = 0; k <= 2; ++k) {
      if (std::string(fam) == "h1" && k == 0) continue;
      const std::string g = Path(std::string(fam) + std::to_string(k) + ".txt");
      ASSERT_EQ(Run({"generate", "--family", fam, "--k", std::to_string(k), "-o",
                     g}),
                kExitOk);
      const std::string js = Path("r.json");
      ASSERT_EQ(Run({"analyze", g, "--json", js, "--no-hull"}), kExitOk);
      const json r = json::parse(Slurp(js));
      EXPECT_EQ(r["hb_doubled"],
                ExpectedHyperbolicity(ParseFamily(fam), k, k).doubled());
      EXPECT_EQ(Run({"detect", g, "--family", fam, "--k", std::to_string(k),
                     "--materialize"}),
                kExitOk)
          << fam << k << out_.str();
    }
  }
}

}  // namespace
}  // namespace hbkit
