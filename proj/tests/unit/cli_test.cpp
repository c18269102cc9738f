#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "charkit/io/json.hpp"

using namespace charkit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("charkit_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  Outcome run(const std::string& args) const {
    const fs::path out = path("stdout.txt");
    const std::string cmd = std::string(CHARKIT_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + path("stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
  }

  Json run_json(const std::string& args) const {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 0) << args << "\n" << slurp(path("stderr.txt"));
    return Json::parse(r.out);
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

const std::string golden = CHARKIT_GOLDEN_DIR;

}  // namespace

TEST_F(Cli, ConstantTransformsToDelta) {
  write("one.json", R"({"p":3,"d":2,"values":[1,1,1,1,1,1,1,1,1]})");
  const Json s = run_json("transform " + path("one.json").string());
  EXPECT_EQ(s["kind"], "cyclotomic");
  const Spectrum spec = std::get<CyclotomicGrid>(function_from_json(s));
  for (std::size_t i = 0; i < spec.size(); ++i) EXPECT_EQ(spec[i].is_zero(), i != 0);
  EXPECT_EQ(spec[0], Cyclotomic::from_rational(1, 3));
}

TEST_F(Cli, TransformThenInverseIsByteIdentical) {
  for (const char* shape : {"--p 3 --d 2", "--p 2 --d 3", "--p 5 --d 1", "--p 2 --l 2 --d 2"}) {
    ASSERT_EQ(run(std::string("random ") + shape + " --seed 9 -o " + path("f.json").string()).code, 0);
    ASSERT_EQ(run("transform " + path("f.json").string() + " -o " + path("s.json").string()).code, 0);
    ASSERT_EQ(run("transform --inverse " + path("s.json").string() + " -o " + path("g.json").string()).code, 0);
    EXPECT_EQ(slurp(path("f.json")), slurp(path("g.json"))) << shape;
  }
}

TEST_F(Cli, OracleMatchesExactly) {
  for (int seed = 0; seed < 10; ++seed) {
    const std::string shape = seed % 2 ? "--p 3 --d 2" : "--p 2 --d 3";
    ASSERT_EQ(run("random " + shape + " --seed " + std::to_string(seed) + " -o " + path("f.json").string()).code, 0);
    EXPECT_EQ(run_json("transform --oracle " + path("f.json").string())["match"], "exact");
  }
}

TEST_F(Cli, StaircaseGoldens) {
  for (int p : {3, 5, 7}) {
    const std::string stem = golden + "/staircase_p" + std::to_string(p);
    const Outcome bw = run("bandwidth " + stem + ".json");
    ASSERT_EQ(bw.code, 0);
    EXPECT_EQ(bw.out, slurp(stem + ".bandwidth.json"));
    EXPECT_EQ(Json::parse(bw.out)["cbw"], 3);
    const Outcome dec = run("decompose --form reduced --input " + stem + ".json");
    ASSERT_EQ(dec.code, 0);
    EXPECT_EQ(dec.out, slurp(stem + ".reduced.json"));
  }
}

TEST_F(Cli, ProjectThenReconstruct) {
  const std::string f = golden + "/staircase_p5.json";
  ASSERT_EQ(run("tomography project " + f + " -o " + path("m.json").string()).code, 0);
  const Outcome back = run("tomography reconstruct " + path("m.json").string());
  ASSERT_EQ(back.code, 0);
  EXPECT_EQ(back.out, slurp(f));

  Json m = Json::parse(slurp(path("m.json")));
  m["masses"][2]["m"][1] = "7";
  write("bad.json", m.dump());
  EXPECT_EQ(run("tomography reconstruct " + path("bad.json").string()).code, 2);
  EXPECT_NE(slurp(path("stderr.txt")).find("inconsistent"), std::string::npos);
}

TEST_F(Cli, MasslessConstantHasNoParts) {
  write("c.json", R"({"p":5,"d":2,"values":["2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3",
                       "2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3","2/3"]})");
  const Json d = run_json("decompose --form massless " + path("c.json").string());
  EXPECT_TRUE(d["parts"].empty());
  EXPECT_EQ(d["constant"], "2/3");
}

TEST_F(Cli, VerifyUncertaintyExhaustive) {
  const Json r = run_json("verify uncertainty --p 2 --d 2 --exhaustive");
  EXPECT_EQ(r["suites"][0]["checks"], 15);
  EXPECT_EQ(r["suites"][0]["passed"], 15);
  EXPECT_TRUE(r["ok"]);
}

TEST_F(Cli, VerifySelfDualOnlyEmptyModThree) {
  const Json r = run_json("verify selfdual --p 3 --d 2 --exhaustive");
  EXPECT_EQ(r["suites"][0]["facts"]["p=3,d=2"]["subsets"], 512);
  EXPECT_EQ(r["suites"][0]["facts"]["p=3,d=2"]["self_dual"], Json::parse(R"([{"kind":"empty"}])"));
}

TEST_F(Cli, VerifyAllIsDeterministic) {
  const Outcome a = run("verify all --seed 42");
  const Outcome b = run("verify all --seed 42");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("verify all --seed 43").out);
}

TEST_F(Cli, TableFormat) {
  const Outcome r = run("bandwidth --format table " + golden + "/staircase_p3.json");
  EXPECT_NE(r.out.find("cbw  3\n"), std::string::npos) << r.out;
}

TEST_F(Cli, EigenPairFiles) {
  const Json meta = run_json("eigen pair --p 2 --d 2 --subspace [[1,1]] --pair-prefix " + path("pair").string());
  EXPECT_TRUE(meta["degenerate"]);
  EXPECT_TRUE(meta["exact"]);
  EXPECT_TRUE(fs::exists(path("pair.plus.json")));
  EXPECT_NO_THROW(function_from_json(Json::parse(slurp(path("pair.minus.json")))));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("transform --bogus").code, 1);
  EXPECT_EQ(run("verify nosuch").code, 1);
  EXPECT_EQ(run("random --d 2").code, 1);
  EXPECT_EQ(run("bandwidth " + path("missing.json").string()).code, 2);
  write("bad.json", R"({"p":4,"d":2,"values":[]})");
  EXPECT_EQ(run("bandwidth " + path("bad.json").string()).code, 2);
  write("ring.json", R"({"p":2,"d":1,"modulus_exponent":2,"values":[1,0,0,0]})");
  EXPECT_EQ(run("decompose " + path("ring.json").string()).code, 2);
  EXPECT_EQ(run("verify selfdual --p 3 --d 3 --exhaustive").code, 2);
  // Sphere equidistribution is only claimed in even dimension, so the suite fails.
  EXPECT_EQ(run("verify spheres --p 3 --d 3 --suite-size 1").code, 3);
}
