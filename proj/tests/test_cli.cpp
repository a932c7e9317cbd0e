#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "acceptance.hpp"
#include "commands.hpp"

namespace covsum::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("covsum_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run(const std::string& args) {
  const int raw = std::system((std::string(COVSUM_EXE) + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(raw);
}

Json classes(std::initializer_list<std::pair<int, int>> list) {
  Json out = Json::array();
  for (auto [a, n] : list) out.push_back(Json{{"a", a}, {"n", n}});
  return out;
}

/// Hypotheses hold except that [x_1] x_2 = 0.
Json coeff_zero_instance() {
  return Json{{"theorem", "t21"},
              {"field", {{"type", "rational"}}},
              {"a0", {{"a", 0}, {"n", 1}}},
              {"classes", classes({{0, 1}, {0, 1}})},
              {"J", {1}},
              {"P", "x2"},
              {"X", {{0, 1}, {0, 1}}}};
}

TEST(CliSystem, Halves) {
  RunReport r = system_report(Json{{"classes", classes({{0, 2}, {1, 2}})}});
  ASSERT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.payload["multiplicity"], 1);
  EXPECT_EQ(r.payload["essential"], Json({1, 2}));
  EXPECT_EQ(r.payload["dual"], "{1(2),0(2)}");
}

TEST(CliSystem, ErdosCoverAllEssential) {
  RunReport r =
      system_report(Json{{"classes", classes({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}})}});
  ASSERT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.payload["multiplicity"], 1);
  EXPECT_EQ(r.payload["essential"], Json({1, 2, 3, 4, 5}));
}

TEST(CliSystem, MalformedJsonIsExit2) {
  auto dir = scratch("malformed");
  RunReport r = cmd_system(write(dir / "bad.json", "{\"classes\": ["));
  EXPECT_EQ(r.status, Status::error);
  EXPECT_EQ(r.exit_code(), 2);
  EXPECT_EQ(r.payload["code"], "parse");
  EXPECT_EQ(run("system " + (dir / "bad.json").string()), 2);
}

TEST(CliVerify, WuQuestionP5) {
  Json inst{{"a0", {{"a", 0}, {"n", 1}}},
            {"classes", classes({{0, 1}, {0, 1}, {0, 1}, {0, 1}})},
            {"p", 5},
            {"c", {1, 1, 2, 4}}};
  RunReport r = verify_instance("c22", inst, true);
  ASSERT_EQ(r.status, Status::verified) << r.payload.dump();
  EXPECT_TRUE(r.payload["oracle_agrees"].get<bool>());
  EXPECT_EQ(r.payload["results"].size(), 5u);
  for (const auto& row : r.payload["results"]) {
    const auto& w = row["progression"]["witnesses"][0];
    EXPECT_EQ(w["aux"].get<std::string>(), std::to_string(row["target"].get<int>()));
  }
}

TEST(CliVerify, ZeroSumOracleAgrees) {
  GenerateOptions g;
  g.kind = "zero-sum";
  g.p = 3;
  g.l = 2;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    g.seed = seed;
    RunReport r = verify_instance("t32", cmd_generate(g), true);
    ASSERT_EQ(r.status, Status::verified);
    EXPECT_TRUE(r.payload["oracle_agrees"].get<bool>());
  }
}

TEST(CliVerify, CoeffZeroIsHypothesisViolation) {
  RunReport r = verify_instance("t21", coeff_zero_instance(), false);
  EXPECT_EQ(r.status, Status::hypothesis_violation);
  EXPECT_EQ(r.exit_code(), 3);
  EXPECT_EQ(r.payload["code"], "coeff-zero");

  auto dir = scratch("coeff_zero");
  EXPECT_EQ(run("verify t21 " + write(dir / "t21.json", coeff_zero_instance().dump()).string()), 3);
}

TEST(CliVerify, SchemaErrors) {
  RunReport missing = verify_instance("t32", Json{{"p", 3}}, false);
  EXPECT_EQ(missing.status, Status::error);
  EXPECT_EQ(missing.payload["code"], "schema");
  RunReport unknown = verify_instance("t99", Json::object(), false);
  EXPECT_EQ(unknown.status, Status::error);
  EXPECT_EQ(run("verify t99 /dev/null"), 2);
}

TEST(CliVerify, DigestIsStable) {
  Json inst{{"theorem", "kemnitz"}, {"q", 2}, {"c", {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}}};
  RunReport a = verify_instance("kemnitz", inst, true);
  RunReport b = verify_instance("kemnitz", inst, true);
  ASSERT_EQ(a.status, Status::verified);
  EXPECT_EQ(a.payload["count_q"], 15);
  EXPECT_EQ(a.payload["count_3q"], 1);
  EXPECT_EQ(pretty(a.to_json()), pretty(b.to_json()));
  EXPECT_EQ(a.digest.size(), 64u);
}

TEST(CliGenerate, Deterministic) {
  for (const char* kind : {"m-cover", "zero-sum", "t21-instance"}) {
    GenerateOptions g;
    g.kind = kind;
    g.seed = 1;
    EXPECT_EQ(pretty(cmd_generate(g)), pretty(cmd_generate(g))) << kind;
  }
  auto dir = scratch("generate");
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  ASSERT_EQ(run("generate m-cover --seed 1 -m 2 -k 10 -o " + a), 0);
  ASSERT_EQ(run("generate m-cover --seed 1 -m 2 -k 10 -o " + b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(CliGenerate, TwoCoverIsValidated) {
  GenerateOptions g;
  g.kind = "m-cover";
  g.seed = 1;
  g.multiplicity = 2;
  g.max_classes = 10;
  Json cover = cmd_generate(g);
  RunReport r = system_report(cover);
  ASSERT_EQ(r.status, Status::verified);
  EXPECT_GE(r.payload["multiplicity"].get<int>(), 2);
  EXPECT_LE(r.payload["k"].get<int>(), 10);
}

TEST(CliGenerate, ZeroSumSchema) {
  GenerateOptions g;
  g.kind = "zero-sum";
  g.p = 3;
  g.l = 2;
  Json inst = cmd_generate(g);
  EXPECT_EQ(inst["theorem"], "t32");
  ZeroSumInstance z = parse_zero_sum(inst);
  EXPECT_NO_THROW(validate(z));
  EXPECT_EQ(z.l(), 2u);
}

TEST(CliGenerate, RejectsBadParameters) {
  GenerateOptions g;
  g.kind = "zero-sum";
  g.p = 4;
  EXPECT_THROW(cmd_generate(g), Error);
  g.kind = "nonsense";
  EXPECT_THROW(cmd_generate(g), DomainError);
}

TEST(CliSuite, EmptyDirectory) {
  RunReport r = cmd_suite(scratch("empty"), {});
  EXPECT_EQ(r.status, Status::error);
  EXPECT_EQ(r.payload["code"], "missing-corpus");
  EXPECT_NE(r.payload["message"].get<std::string>().find("missing corpus"), std::string::npos);
  RunReport absent = cmd_suite(scratch("empty") / "nothing", {});
  EXPECT_EQ(absent.exit_code(), 2);
}

TEST(CliSuite, ShippedCorpusOracle) {
  RunReport r = cmd_suite(COVSUM_CORPUS_DIR, SuiteOptions{{11}});
  ASSERT_EQ(r.status, Status::verified) << r.payload.dump(2);
  EXPECT_EQ(r.payload["failed"], 0);
}

TEST(CliSuite, InjectedBrokenInstanceFails) {
  auto dir = scratch("broken");
  fs::copy(COVSUM_CORPUS_DIR, dir, fs::copy_options::recursive);
  write(dir / "instances" / "zz_broken.json", coeff_zero_instance().dump());
  RunReport r = cmd_suite(dir, SuiteOptions{{11}});
  EXPECT_EQ(r.status, Status::counterexample);
  EXPECT_EQ(r.exit_code(), 1);
  ASSERT_EQ(r.payload["criteria"].size(), 1u);
  EXPECT_FALSE(r.payload["criteria"][0]["passed"].get<bool>());
  EXPECT_NE(r.payload["criteria"][0]["detail"].get<std::string>().find("zz_broken.json"),
            std::string::npos);
  EXPECT_EQ(run("suite " + dir.string() + " --criteria 11"), 1);
}

}  // namespace
}  // namespace covsum::cli
