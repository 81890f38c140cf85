#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cevian/error.hpp"
#include "commands.hpp"
#include "serialization.hpp"
#include "support.hpp"

namespace cevian::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cevian_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Serialization, InstanceRoundTrip) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto inst = simplex::random_instance(n, k, 17, simplex::InstanceKind::Perturbed);
      const InstanceFile file{kSchemaVersion, inst};
      const auto back = parse_instance_file(to_json(file).dump());
      EXPECT_EQ(std::get<simplex::FaceInstance>(back.payload), inst);
    }
  }
}

TEST(Serialization, AcceptsFacesInAnyOrder) {
  const auto file = parse_instance_file(R"({"schema_version": 1, "n": 2, "k": 1, "points": [
      {"subset": [1, 2], "coords": ["1", "2"]},
      {"subset": [0, 1], "coords": ["2", "3"]},
      {"subset": [0, 2], "coords": ["-2/6", "-1"]}]})");
  const auto& inst = std::get<simplex::FaceInstance>(file.payload);
  EXPECT_EQ(inst.faces().front(), IndexSet({0, 1}));
  EXPECT_EQ(inst.point({0, 2}), testing::pt({1, 3}));
}

TEST(Serialization, RejectsBadFiles) {
  auto code = [](const std::string& text) {
    try {
      parse_instance_file(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code("{"), ErrorCode::ParseError);
  EXPECT_EQ(code("[]"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"n": 2, "k": 1, "points": []})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"schema_version": 2, "d": ["1","1"], "e": ["1","1"], "f": ["1","1"]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"schema_version": 1})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"schema_version": 1, "d": [1, 1], "e": ["1","1"], "f": ["1","1"]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"schema_version": 1, "d": ["0.5","1"], "e": ["1","1"], "f": ["1","1"]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"schema_version": 1, "n": 2, "k": 1, "points": [{"subset": [1, 0], "coords": ["1","1"]}]})"),
            ErrorCode::InvalidIndexSet);
}

TEST(Serialization, DecimalStringsRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678, 0.0}) EXPECT_EQ(std::stod(decimal_string(x)), x);
  EXPECT_EQ(decimal_string(0.5), "0.5");
}

TEST(Serialization, DigestDependsOnBytes) {
  EXPECT_EQ(input_digest("abc"), input_digest("abc"));
  EXPECT_NE(input_digest("abc"), input_digest("abd"));
  EXPECT_EQ(input_digest("").rfind("fnv1a64:", 0), 0u);
}

TEST_F(CliTest, Check2dExitCodes) {
  const auto medians = write("m.json", R"({"schema_version": 1,
      "triangle": [["0","0"], ["4","0"], ["0","4"]], "feet": [["2","2"], ["0","2"], ["2","0"]]})");
  const auto ok = invoke({"check2d", medians});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.report()["result"]["ratio_product"], "1");
  EXPECT_EQ(ok.report()["result"]["common_point"], json::array({"4/3", "4/3"}));

  const auto bent = write("b.json", R"({"schema_version": 1,
      "triangle": [["0","0"], ["4","0"], ["0","4"]], "feet": [["2","2"], ["0","2"], ["1","0"]]})");
  const auto no = invoke({"check2d", bent});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.report()["result"]["determinant"], "0");

  const auto flat = write("f.json", R"({"schema_version": 1,
      "triangle": [["0","0"], ["2","0"], ["1","0"]], "feet": [["1","0"], ["1","0"], ["1","0"]]})");
  const auto bad = invoke({"check2d", flat});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("DegenerateTriangle"), std::string::npos);

  EXPECT_EQ(invoke({"check2d", path("missing.json")}).code, 2);
}

TEST_F(CliTest, RandomThenCheck) {
  const auto pos = path("pos.json");
  const auto neg = path("neg.json");
  ASSERT_EQ(invoke({"random", "--n", "3", "--k", "2", "--seed", "1", "--out", pos}).code, 0);
  ASSERT_EQ(invoke({"random", "--n", "3", "--k", "2", "--seed", "1", "--kind", "perturbed", "--out", neg}).code, 0);
  const auto first = slurp(pos);
  ASSERT_EQ(invoke({"random", "--n", "3", "--k", "2", "--seed", "1", "--out", pos}).code, 0);
  EXPECT_EQ(slurp(pos), first);

  const auto yes = invoke({"check", "--oracle", pos});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.report()["oracle"]["agrees"], true);
  EXPECT_TRUE(yes.report()["result"]["common_point"].is_array());

  const auto no = invoke({"check", "--oracle", neg});
  EXPECT_EQ(no.code, 1);
  EXPECT_FALSE(no.report()["result"]["witnesses"].empty());
  EXPECT_EQ(no.report()["result"]["witnesses"][0]["type"], "minor");

  const auto label = json::parse(invoke({"random", "--n", "4", "--k", "2", "--seed", "3", "--out", pos}).out);
  EXPECT_EQ(label["expected_concurrent"], true);
  EXPECT_EQ(invoke({"check", pos}).code, 0);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  const auto file = path("inst.json");
  ASSERT_EQ(invoke({"random", "--n", "4", "--k", "1", "--seed", "5", "--kind", "perturbed", "--out", file}).code, 0);
  auto a = invoke({"check", "--oracle", file}).report();
  auto b = invoke({"check", "--oracle", file}).report();
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, CheckRejectsOffTorus) {
  const auto file = write("off.json", R"({"schema_version": 1, "n": 2, "k": 1, "points": [
      {"subset": [0, 1], "coords": ["1", "0"]},
      {"subset": [0, 2], "coords": ["1", "1"]},
      {"subset": [1, 2], "coords": ["1", "1"]}]})");
  const auto r = invoke({"check", file});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("OffTorus"), std::string::npos);
}

TEST_F(CliTest, Batch) {
  for (int seed = 0; seed < 3; ++seed) {
    invoke({"random", "--n", "3", "--k", "1", "--seed", std::to_string(seed), "--out",
            path("p" + std::to_string(seed) + ".json")});
    invoke({"random", "--n", "3", "--k", "1", "--seed", std::to_string(seed), "--kind", "perturbed", "--out",
            path("q" + std::to_string(seed) + ".json")});
  }
  const auto r = invoke({"check", "--oracle", "--batch", dir_.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["result"]["concurrent"], 3);
  EXPECT_EQ(r.report()["result"]["not_concurrent"], 3);

  write("broken.json", "{");
  EXPECT_EQ(invoke({"check", "--batch", dir_.string()}).code, 2);
  EXPECT_EQ(invoke({"check", "--batch", path("nowhere")}).code, 2);
  EXPECT_EQ(invoke({"check"}).code, 2);
}

TEST_F(CliTest, Dp6) {
  const auto lift = invoke({"dp6", "lift", write("l.json", R"({"schema_version": 1,
      "d": ["1","2"], "e": ["3","1"], "f": ["2","3"]})")});
  EXPECT_EQ(lift.code, 0);
  EXPECT_EQ(point_from_json(lift.report()["result"]["x"]), testing::pt({2, 3, 6}));

  const auto excluded = invoke({"dp6", "lift", write("x.json", R"({"schema_version": 1,
      "d": ["1","0"], "e": ["1","0"], "f": ["1","0"]})")});
  EXPECT_EQ(excluded.code, 1);
  EXPECT_EQ(excluded.report()["result"]["error"], "NotInImage");
  EXPECT_EQ(excluded.report()["result"]["excluded_point"], "((1:0),(1:0),(1:0))");

  const auto other = invoke({"dp6", "lift", write("y.json", R"({"schema_version": 1,
      "d": ["0","3"], "e": ["0","1"], "f": ["0","-2"]})")});
  EXPECT_EQ(other.report()["result"]["excluded_point"], "((0:1),(0:1),(0:1))");

  const auto off = invoke({"dp6", "lift", write("o.json", R"({"schema_version": 1,
      "d": ["1","1"], "e": ["1","1"], "f": ["2","1"]})")});
  EXPECT_EQ(off.code, 1);
  EXPECT_EQ(off.report()["result"]["error"], "NotOnH");

  const auto check = invoke({"dp6", "check", write("c.json", R"({"schema_version": 1,
      "x": ["1","1","1"], "d": ["1","1"], "e": ["1","1"], "f": ["1","1"]})")});
  EXPECT_EQ(check.code, 0);
  EXPECT_EQ(check.report()["result"]["on_S"], true);
  EXPECT_EQ(check.report()["result"]["on_H"], true);

  const auto miss = invoke({"dp6", "check", write("s.json", R"({"schema_version": 1,
      "x": ["1","0","0"], "d": ["1","0"], "e": ["0","1"], "f": ["0","1"]})")});
  EXPECT_EQ(miss.code, 1);
  EXPECT_EQ(miss.report()["result"]["on_S"], false);

  EXPECT_EQ(invoke({"dp6", "lift", write("w.json", R"({"schema_version": 1, "d": ["1","1","1"],
      "e": ["1","1"], "f": ["1","1"]})")}).code, 2);
  EXPECT_EQ(invoke({"dp6"}).code, 2);
}

TEST_F(CliTest, RankSearch) {
  const auto constructed = path("r.json");
  ASSERT_EQ(invoke({"random", "--n", "3", "--k", "1", "--kind", "rank", "--r", "1", "--seed", "2", "--out",
                    constructed}).code, 0);
  const auto found = invoke({"rank-search", "--r", "1", constructed});
  EXPECT_EQ(found.code, 0);
  EXPECT_EQ(found.report()["result"]["status"], "Found");
  EXPECT_LE(std::stod(found.report()["result"]["residual"].get<std::string>()), 1e-8);
  EXPECT_EQ(found.report()["verification"]["passes"], true);
  EXPECT_EQ(found.report()["verification"]["subsets"].size(), 6u);

  const auto positive = path("p.json");
  invoke({"random", "--n", "4", "--k", "2", "--seed", "4", "--out", positive});
  EXPECT_EQ(invoke({"rank-search", "--r", "0", positive}).code, 0);

  const auto perturbed = path("q.json");
  invoke({"random", "--n", "4", "--k", "2", "--seed", "4", "--kind", "perturbed", "--out", perturbed});
  const auto miss = invoke({"rank-search", "--r", "0", "--tol", "1e-10", perturbed});
  EXPECT_EQ(miss.code, 1);
  EXPECT_TRUE(miss.report().contains("caveat"));

  EXPECT_EQ(invoke({"rank-search", "--r", "9", positive}).code, 2);
  EXPECT_EQ(invoke({"rank-search", "--r", "x", positive}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"random", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"random", "--n", "3", "--k", "3"}).code, 2);
  EXPECT_EQ(invoke({"random", "--n", "3", "--k", "1", "--kind", "odd"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, WrongPayloadKind) {
  const auto dp = write("dp.json", R"({"schema_version": 1, "d": ["1","1"], "e": ["1","1"], "f": ["1","1"]})");
  EXPECT_EQ(invoke({"check", dp}).code, 2);
  EXPECT_EQ(invoke({"check2d", dp}).code, 2);
  EXPECT_EQ(invoke({"rank-search", dp}).code, 2);
}

}  // namespace
}  // namespace cevian::cli
