#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "test_support.hpp"

using namespace cliffym;

namespace {

const std::string kConfigDir = CLIFFYM_CONFIG_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run verify(cli::VerifyOptions o) {
  std::ostringstream out, err;
  const int code = cli::cmd_verify(o, out, err);
  return {code, out.str(), err.str()};
}

cli::VerifyOptions options(const std::string& file) {
  cli::VerifyOptions o;
  o.config_path = kConfigDir + "/" + file;
  return o;
}

// Writes a throwaway config and returns its path.
std::string temp_config(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

int verify_text(const std::string& text) {
  cli::VerifyOptions o;
  o.config_path = temp_config("cfg.json", text);
  return verify(o).code;
}

}  // namespace

TEST(Tables, JsonMatchesPrintedValues) {
  std::ostringstream out, err;
  ASSERT_EQ(cli::cmd_tables(4, true, out, err), kExitOk);
  const Json j = Json::parse(out.str());
  std::vector<std::string> row;
  for (const auto& v : j.at("B").at(2)) row.push_back(to_string(parse_rational(v)));
  EXPECT_EQ(row, (std::vector<std::string>{"1", "0", "-5/16", "0", "1/64"}));

  out.str("");
  ASSERT_EQ(cli::cmd_tables(2, true, out, err), kExitOk);
  EXPECT_EQ(Json::parse(out.str()).at("A"), Json::parse(R"([["1","1","1"],["2","0","-2"],["4","0","4"]])"));

  out.str("");
  ASSERT_EQ(cli::cmd_tables(3, false, out, err), kExitOk);
  EXPECT_NE(out.str().find("D =\n  1 1\n  3 -1\n"), std::string::npos);
}

TEST(Tables, OutOfRangeDimensionFails) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_tables(0, false, out, err), kExitConfig);
  EXPECT_EQ(cli::cmd_tables(11, true, out, err), kExitConfig);
  EXPECT_FALSE(err.str().empty());
}

TEST(Golden, PassesAndDetectsMutation) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_golden(out, err), kExitOk);
  std::ostringstream out2, err2;
  EXPECT_EQ(cli::cmd_golden(out2, err2, [](int n, int k) { return contraction_eigenvalue(n, k) * 2; }), kExitGolden);
  EXPECT_NE(err2.str().find("expected"), std::string::npos);
}

TEST(Verify, IdentityConfigHasZeroResiduals) {
  auto o = options("identity_n4.json");
  o.sigma = "0.5,0.25";
  const auto r = verify(o);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("sigma"), Json::array({0.5, 0.25}));
  EXPECT_EQ(j.at("primitive_max"), 0.0);
  EXPECT_LT(j.at("eq1_max").get<double>(), 1e-15);
  EXPECT_LT(j.at("eq2_max").get<double>(), 1e-14);
  EXPECT_TRUE(j.at("passed").get<bool>());
}

TEST(Verify, RandomConfigPasses) {
  const auto r = verify(options("random_n4.json"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_LT(j.at("eq2_max").get<double>(), 1e-7);
  EXPECT_EQ(j.at("samples"), 17);
  EXPECT_EQ(j.at("epsilon"), Json::array({12.0, 0.0}));
  EXPECT_NEAR(j.at("epsilon_recovered").at(0).get<double>(), 12.0, 1e-9);
  for (const char* k : {"primitive_max", "curvature_max", "eq1_max", "eq2_max", "conservation_max", "covariance_max"})
    EXPECT_TRUE(j.at("gauge_check").contains(k) || j.contains(k)) << k;
  EXPECT_EQ(j.at("points").size(), 17u);
  EXPECT_TRUE(j.at("points").at(3).contains("eq2_max"));
}

TEST(Verify, EpsilonOverrideBreachesTolerance) {
  const auto r = verify(options("epsilon_override_n4.json"));
  EXPECT_EQ(r.code, kExitTolerance);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j.at("passed").get<bool>());
  // The residual is exactly (12 - 13) h^nu, so it tracks the largest coefficient of h.
  const RunConfig cfg = cli::load_config(options("epsilon_override_n4.json"));
  const Pipeline st = build_pipeline(cfg);
  double h = 0.0;
  for (const auto& x : st.points) h = std::max(h, max_norm(st.h.at(x)));
  EXPECT_NEAR(j.at("eq2_max").get<double>(), h, 1e-10);
}

TEST(Verify, FiniteDifferenceMode) {
  auto o = options("random_n4.json");
  o.fd = true;
  const auto r = verify(o);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("derivatives"), "fd");
  EXPECT_EQ(j.at("tolerances").at("primitive"), 1e-5);
  EXPECT_LT(j.at("primitive_max").get<double>(), 1e-5);
}

TEST(Verify, ReportIsDeterministicAndSeedSensitive) {
  const auto a = verify(options("random_n4.json"));
  const auto b = verify(options("random_n4.json"));
  EXPECT_EQ(a.out, b.out);
  auto o = options("random_n4.json");
  o.seed = 99;
  const auto c = verify(o);
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(Json::parse(c.out).at("seed"), 99);
}

TEST(Verify, ExplicitSpecAndOutputFile) {
  auto o = options("explicit_n3.json");
  o.output = ::testing::TempDir() + "report.json";
  const auto r = verify(o);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(*o.output);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), r.out);
  EXPECT_EQ(Json::parse(r.out).at("samples"), 25);
}

TEST(Verify, ConfigErrors) {
  EXPECT_EQ(verify(options("invalid_frame.json")).code, kExitConfig);
  EXPECT_EQ(verify(options("missing.json")).code, kExitConfig);
  EXPECT_EQ(verify_text("{ not json"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"frame": {"kind": "identity"}})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 0, "q": 0}})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "frame": {"kind": "spiral"}})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "gauge": {"kind": "exp_bivector", "terms": [{"blade": "e1", "poly": {"monomials": []}}]}})"),
            kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "gauge": {"kind": "exp_bivector", "terms": [{"blade": "e13", "poly": {"monomials": []}}]}})"),
            kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "fd_step": -1})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "samples": {"box": [1, -1]}})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "sigma": "one"})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "derivatives": "symbolic"})"), kExitConfig);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 2, "q": 0}, "tolerances": {"primitive": 0}})"), kExitConfig);
  auto o = options("random_n4.json");
  o.sigma = "1,x";
  EXPECT_EQ(verify(o).code, kExitConfig);
}

TEST(Verify, MinimalConfigUsesDefaults) {
  const RunConfig c = parse_run_config(std::string(R"({"signature": {"p": 1, "q": 1}})"));
  EXPECT_EQ(c.sample_count, 16);
  EXPECT_EQ(c.sigma, Complex(1.0));
  EXPECT_FALSE(c.epsilon.has_value());
  EXPECT_FALSE(c.finite_difference);
  EXPECT_EQ(c.tol.primitive, kPrimitiveTolerance);
  EXPECT_EQ(verify_text(R"({"signature": {"p": 1, "q": 1}})"), kExitOk);
}

TEST(ComplexArgs, Parsing) {
  EXPECT_EQ(cli::parse_complex_arg("2"), Complex(2.0));
  EXPECT_EQ(cli::parse_complex_arg("-0.5,1.5"), Complex(-0.5, 1.5));
  EXPECT_THROW(cli::parse_complex_arg(""), ConfigError);
  EXPECT_THROW(cli::parse_complex_arg("1,"), ConfigError);
  EXPECT_THROW(cli::parse_complex_arg("1.0abc"), ConfigError);
  EXPECT_EQ(parse_complex(Json::array({1.0, -2.0})), Complex(1.0, -2.0));
  EXPECT_THROW(parse_complex(Json::array({1.0})), ConfigError);
}

TEST(Demo, SmallDimensionsPass) {
  for (int n : {2, 3, 4}) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_demo(n, out, err), kExitOk) << out.str() << err.str();
    EXPECT_NE(out.str().find("demo passed"), std::string::npos);
  }
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_demo(5, out, err), kExitConfig);
}
