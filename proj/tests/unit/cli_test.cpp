#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "builders.hpp"
#include "exsym/io/cli.hpp"
#include "exsym/io/document.hpp"

using namespace exsym;
using namespace exsym::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = cli::kPass) {
  args.push_back("--json");
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("exsym_cli_test_" + name)).string();
}

}  // namespace

TEST(Document, ExportImportRoundTripIsExact) {
  for (const auto& t : {sphere_triple(1), sphere_triple(3), sl2_triple(), cotangent_so3_triple(),
                        with_gram(sphere_triple(1), sphere_triple(1).alg().gram() * q(7, 3))}) {
    const auto j = io::to_json(io::make_document(t));
    const auto back = io::parse_triple_document(json::parse(j.dump())).triple;
    EXPECT_EQ(back.alg().structure(), t.alg().structure()) << t.name();
    EXPECT_EQ(back.alg().gram(), t.alg().gram()) << t.name();
    EXPECT_EQ(back.theta(), t.theta()) << t.name();
    EXPECT_EQ(back.dmat(), t.dmat()) << t.name();
    EXPECT_EQ(back.alg().labels(), t.alg().labels()) << t.name();
  }
}

TEST(Document, ParseErrorsCarryLocation) {
  auto j = io::to_json(io::make_document(sphere_triple(1)));
  j["structure"][0][3] = "1/0";
  try {
    io::parse_triple_document(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("/structure/0/3"), std::string::npos) << e.what();
  }
  j = io::to_json(io::make_document(sphere_triple(1)));
  j["schema_version"] = "2";
  EXPECT_THROW(io::parse_triple_document(j), Error);
  j = io::to_json(io::make_document(sphere_triple(1)));
  j["structure"][0][0] = 7;
  EXPECT_THROW(io::parse_triple_document(j), Error);
}

TEST(Cli, ValidateSphereFixture) {
  const auto r = run({"validate", fixture("sphere1.json")});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
}

TEST(Cli, ExportThenValidate) {
  const auto path = temp_path("sphere1.json");
  ASSERT_EQ(run({"export", "sphere(1)", "-o", path}).code, cli::kPass);
  EXPECT_EQ(run({"validate", path}).code, cli::kPass);
  std::remove(path.c_str());
}

TEST(Cli, NonSymmetricGramNamesTheCheck) {
  const auto j = run_json({"validate", fixture("bad_gram.json")}, cli::kFail);
  EXPECT_FALSE(j["ok"].get<bool>());
  bool named = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "gram symmetry") named = !c["passed"].get<bool>();
  EXPECT_TRUE(named);
  const auto text = run({"validate", fixture("bad_gram.json")});
  EXPECT_NE(text.out.find("gram symmetry"), std::string::npos);
}

TEST(Cli, MalformedRationalIsParseError) {
  const auto r = run({"validate", fixture("malformed_rational.json")});
  EXPECT_EQ(r.code, cli::kParseError);
  EXPECT_NE(r.err.find("/gram/0/0"), std::string::npos) << r.err;
  EXPECT_EQ(run({"analyze", fixture("unknown_flag.json")}).code, cli::kParseError);
  EXPECT_EQ(run({"validate", fixture("does_not_exist.json")}).code, cli::kParseError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
  EXPECT_EQ(run({"--help"}).code, cli::kPass);
}

TEST(Cli, AnalyzeSphereTwo) {
  const auto j = run_json({"analyze", fixture("sphere2.json")});
  EXPECT_EQ(j["tri_class"], "Invertible");
  EXPECT_TRUE(j["semisimple"].get<bool>());
  EXPECT_TRUE(j["theorem1"]["consistent"].get<bool>());
  EXPECT_EQ(j["prop1"]["status"], "verified");
}

TEST(Cli, AnalyzeNilpotentFixtures) {
  for (const char* f : {"nilpotent_search.json", "nilpotent_search_121.json"}) {
    const auto j = run_json({"analyze", fixture(f)});
    const auto c = j["tri_class"].get<std::string>();
    EXPECT_TRUE(c == "Zero" || c == "TwoStepNilpotentNonzero") << f;
    EXPECT_FALSE(j["semisimple"].get<bool>());
    EXPECT_TRUE(j["quadratic_extension"]["ok"].get<bool>()) << f;
    EXPECT_TRUE(j["single_block"].get<bool>()) << f;
  }
  EXPECT_EQ(run_json({"analyze", fixture("nilpotent_search.json")})["tri_class"], "TwoStepNilpotentNonzero");
}

TEST(Cli, AnalyzeAbelian) {
  const auto j = run_json({"analyze", fixture("abelian_flat1.json")});
  EXPECT_EQ(j["tri_class"], "Zero");
  for (const auto& x : j["h"]) EXPECT_EQ(x, "0");
}

TEST(Cli, AnalyzeIsDeterministic) {
  const auto a = run({"analyze", fixture("cotangent_so3.json"), "--json", "--seed", "3"});
  const auto b = run({"analyze", fixture("cotangent_so3.json"), "--json", "--seed", "3"});
  EXPECT_EQ(a.code, cli::kPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AnalyzeFloatBackend) {
  const auto j = run_json({"analyze", fixture("sphere1.json"), "--float"});
  EXPECT_EQ(j["backend"], "float");
  EXPECT_NEAR(j["h"][0].get<double>(), -1.0, 1e-12);
}

TEST(Cli, ClassifyPrintsClass) {
  const auto r = run({"classify", fixture("sphere1.json")});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_NE(r.out.find("Invertible"), std::string::npos);
}

TEST(Cli, ImmersionE3Plus) {
  const auto j = run_json({"immersion", "E3+"});
  EXPECT_LT(std::abs(j["samples"][0]["h"][3].get<double>() - 1.0), 1e-6);
  EXPECT_LT(j["max_abs_a_h"].get<double>(), 1e-6);
}

TEST(Cli, ImmersionE1Minus) {
  const auto j = run_json({"immersion", "E1-"});
  EXPECT_LT(j["max_nabla_alpha"].get<double>(), 1e-5);
  EXPECT_LT(j["max_abs_h"].get<double>(), 1e-8);
}

TEST(Cli, ImmersionSphereTwo) {
  const auto j = run_json({"immersion", "sphere(2)"});
  for (const auto& s : j["samples"]) {
    EXPECT_NEAR(s["a_h"][0][0].get<double>(), 1.0, 1e-8);
    EXPECT_NEAR(s["a_h"][0][1].get<double>(), 0.0, 1e-8);
    EXPECT_NEAR(s["a_h"][1][1].get<double>(), 1.0, 1e-8);
  }
}

TEST(Cli, ImmersionFromDocument) {
  const auto j = run_json({"immersion", fixture("e1_plus_immersion.json")});
  EXPECT_LT(j["max_nabla_alpha"].get<double>(), 1e-5);
  EXPECT_EQ(j["grid_points"], 9);
  // not a built-in, so read as a missing file
  EXPECT_EQ(run({"immersion", "E9"}).code, cli::kParseError);
}

TEST(Cli, OrbitPointsLieOnCircle) {
  const auto j = run_json({"orbit", fixture("sphere1.json"), "--x", "0,0,1", "--count", "8"});
  ASSERT_EQ(j["points"].size(), 8u);
  for (const auto& p : j["points"]) {
    const auto x = p["point"];
    EXPECT_NEAR(std::hypot(x[0].get<double>() + 1.0, x[1].get<double>()), 1.0, 1e-10);
  }
  EXPECT_EQ(run({"orbit", fixture("sphere1.json"), "--x", "1,0,0"}).code, cli::kFail);
}

TEST(Cli, SearchWritesIndecomposableDocument) {
  const auto path = temp_path("search.json");
  const auto r = run({"search", "--dims", "1,2,1", "--seed", "7", "-o", path});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_NE(r.err.find("seed: 7"), std::string::npos);
  const auto doc = io::load_triple_document(path);
  EXPECT_TRUE(doc.assert_indecomposable);
  EXPECT_TRUE(doc.quad.has_value());
  EXPECT_EQ(run({"analyze", path}).code, cli::kPass);
  std::remove(path.c_str());
  EXPECT_EQ(run({"search", "--budget", "0"}).code, cli::kFail);
}
