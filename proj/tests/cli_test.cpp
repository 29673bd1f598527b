// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "matroid/all.hpp"
#include "matroid/cli.hpp"

namespace matroid {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "matroid");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, FreeProductOfLineAndTwoDoublePoints) {
  const Outcome r = run({"freeprod", "uniform:2,3", "2:0;1+2:0;1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Matroid product = parse_matroid(r.out.substr(0, r.out.size() - 1));
  EXPECT_EQ(product.size(), 7u);
  EXPECT_EQ(product.num_bases(), 25u);
  EXPECT_EQ(r.out, to_literal(free_product(uniform(2, 3), testing::two_double_points())) + "\n");
}

TEST(CliTest, IsoPrintsBijection) {
  const Outcome r = run({"iso", "3:0,1;0,2", "3:0,2;1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Bijection phi = parse_bijection(r.out.substr(0, r.out.size() - 1));
  EXPECT_EQ(relabel(parse_matroid("3:0,1;0,2"), phi), parse_matroid("3:0,2;1,2"));

  const Outcome no = run({"iso", "uniform:1,2", "2:0"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "none\n");
}

TEST(CliTest, Welsh) {
  const Outcome r = run({"welsh", "2", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "products=32 distinct=32 injective=yes\n");
}

TEST(CliTest, CoreVerbs) {
  EXPECT_EQ(run({"parse", "3:1,2;0,1;0,2"}).out, "3:0,1;0,2;1,2\n");
  EXPECT_EQ(run({"parse", "zero:2+free:1"}).out, "3:2\n");
  EXPECT_EQ(run({"rank", "4:0,2;0,3;1,2;1,3", "0,1,2"}).out, "rank=2 nullity=1 lack=0\n");
  EXPECT_EQ(run({"rank", "uniform:2,3", "e"}).out, "rank=0 nullity=0 lack=2\n");
  EXPECT_EQ(run({"dual", "uniform:2,3"}).out, "3:0;1;2\n");
  EXPECT_EQ(run({"restrict", "uniform:2,3", "0,1"}).out, "2:0,1\n");
  EXPECT_EQ(run({"contract", "uniform:2,3", "0"}).out, "2:0;1\n");
  EXPECT_EQ(run({"dsum", "free:1", "zero:1"}).out, "2:0\n");
  EXPECT_EQ(run({"freeprod", "free:1", "zero:1"}).out, "2:0;1\n");
  EXPECT_EQ(run({"factcount", "uniform:1,2", "free:1", "zero:1"}).out, "2\n");
}

TEST(CliTest, WeakMapAndRecover) {
  EXPECT_EQ(run({"weakmap", "uniform:1,2", "2:1"}).out, "0,1\n");
  const Outcome none = run({"weakmap", "2:1", "uniform:1,2"});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "none\n");
  EXPECT_EQ(run({"weakmap", "uniform:1,2", "2:1", "1,0"}).out, "weak=yes\n");
  const Outcome no = run({"weakmap", "2:1", "uniform:1,2", "1,0"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "weak=no\n");

  const Outcome rec = run({"recover", "2:1", "1"});
  ASSERT_EQ(rec.code, 0) << rec.err;
  EXPECT_EQ(rec.out, "left=1:e\nright=1:0\nwitness=0\n");
  const Outcome fail = run({"recover", "4:0,2;0,3;1,2;1,3", "2"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(fail.out, "none\n");
}

TEST(CliTest, EnumerateToFileIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "matroid_cli_enum_a.txt").string();
  const std::string b = (dir / "matroid_cli_enum_b.txt").string();
  ASSERT_EQ(run({"enumerate", "4", "--out", a}).code, 0);
  ASSERT_EQ(run({"--workers", "3", "enumerate", "4", "--out", b}).code, 0);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a), format_catalog(enumerate_matroids(4)));
  EXPECT_EQ(run({"enumerate", "2"}).out, format_catalog(enumerate_matroids(2)));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliTest, Verify) {
  const Outcome pair = run({"verify", "uniform:2,3", "4:0,2;0,3;1,2;1,3"});
  EXPECT_EQ(pair.code, 0) << pair.out;
  EXPECT_NE(pair.out.find("PASS theorem-weak-maps 1/1"), std::string::npos) << pair.out;
  EXPECT_NE(pair.out.find("verify: all checks passed"), std::string::npos);

  const Outcome scaled = run({"verify", "--scale", "4", "--quiet"});
  EXPECT_EQ(scaled.code, 0);
  EXPECT_EQ(scaled.out, "verify: all checks passed\n");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"dual"}).code, 2);
  EXPECT_EQ(run({"dual", "free:1", "free:2"}).code, 2);
  EXPECT_EQ(run({"welsh", "2", "x"}).code, 2);
  EXPECT_EQ(run({"enumerate", "9"}).code, 2);
  EXPECT_EQ(run({"--workers", "0", "enumerate", "2"}).code, 2);
  EXPECT_EQ(run({"factcount", "free:3", "free:1", "free:1"}).code, 2);

  const Outcome bad = run({"dual", "2:0;0,1"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("UnequalCardinality"), std::string::npos);
  EXPECT_EQ(run({"parse", "3:0,1; 0,2"}).code, 3);
  EXPECT_EQ(run({"parse", "uniform:4,3"}).code, 3);
  EXPECT_EQ(run({"rank", "free:2", "0,5"}).code, 3);
  EXPECT_EQ(run({"weakmap", "free:2", "free:2", "0,0"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace matroid
