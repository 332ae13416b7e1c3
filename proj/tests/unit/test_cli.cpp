// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "polydisc/commands.hpp"
#include "polydisc/generators.hpp"
#include "polydisc/json_io.hpp"

namespace {

using namespace polydisc;
using namespace polydisc::cli;
using nlohmann::json;
namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polydisc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string scalar_half() { return write("half.json", R"({"n":1,"dim":1,"matrices":[[[[0.5,0]]]]})"); }

  std::string bishift() {
    std::vector<std::vector<int>> grading;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) grading.push_back({a, b});
    return write("bishift.json", io::tuple_to_json(gen::truncated_bishift(3), grading));
  }

  static json parse(const CommandOutput& out) { return json::parse(out.report); }

  fs::path dir_;
  RunConfig cfg_;
};

TEST_F(Cli, ClassifyScalar) {
  const CommandOutput out = cmd_classify(scalar_half(), cfg_);
  EXPECT_EQ(out.exit_code, kExitOk);
  const json r = parse(out);
  EXPECT_EQ(r["command"], "classify");
  EXPECT_EQ(r["exit_code"], 0);
  EXPECT_TRUE(r["classification"]["is_pure"].get<bool>());
  EXPECT_TRUE(r["classification"]["is_szego"].get<bool>());
  EXPECT_TRUE(r["classification"]["is_beurling"].get<bool>());
}

TEST_F(Cli, ClassifyBishiftIsNotBeurling) {
  const json r = parse(cmd_classify(bishift(), cfg_));
  EXPECT_NEAR(r["classification"]["beurling_residual"].get<double>(), 1.0, 1e-12);
  EXPECT_FALSE(r["classification"]["is_beurling"].get<bool>());
  EXPECT_FALSE(r["classification"]["beurling_worst_pair"].is_null());
}

TEST_F(Cli, MalformedJsonExitsTwoWithPosition) {
  const CommandOutput out = cmd_classify(write("bad.json", "{\n  \"n\": 1,\n  oops\n}"), cfg_);
  EXPECT_EQ(out.exit_code, kExitInvalid);
  const json r = parse(out);
  EXPECT_EQ(r["error"]["code"], "ParseError");
  EXPECT_EQ(r["error"]["i"], 3);
}

TEST_F(Cli, ValidationErrorReportsOneBasedPair) {
  const std::string path = write("nc.json", R"({"n": 2, "dim": 2, "matrices": [
    [[[0, 0], [1, 0]], [[0, 0], [0, 0]]],
    [[[0, 0], [0, 0]], [[1, 0], [0, 0]]]]})");
  const CommandOutput out = cmd_classify(path, cfg_);
  EXPECT_EQ(out.exit_code, kExitInvalid);
  const json r = parse(out);
  EXPECT_EQ(r["error"]["i"], 1);
  EXPECT_EQ(r["error"]["j"], 2);
}

TEST_F(Cli, CharfnAtOrigin) {
  const std::string pts = write("pts.json", R"({"points": [[[0, 0]]]})");
  const CommandOutput out = cmd_charfn(scalar_half(), pts, cfg_);
  EXPECT_EQ(out.exit_code, kExitOk);
  const json r = parse(out);
  EXPECT_NEAR(r["values"][0]["matrix"][0][0][0].get<double>(), -0.5, 1e-15);
  EXPECT_NEAR(r["values"][0]["matrix"][0][0][1].get<double>(), 0.0, 1e-15);
}

TEST_F(Cli, CharfnGateAndWindow) {
  const std::string path = bishift();
  EXPECT_EQ(cmd_charfn(path, std::nullopt, cfg_).exit_code, kExitBeurling);
  RunConfig windowed = cfg_;
  windowed.window = 1;
  windowed.grid = 8;
  EXPECT_EQ(cmd_charfn(path, std::nullopt, windowed).exit_code, kExitOk);
}

TEST_F(Cli, HardyExamples) {
  RunConfig c = cfg_;
  c.degree = 6;
  const json z1 = parse(cmd_hardy(write("z1.json", R"({"kind":"monomial","exponent":[1,0]})"), c));
  EXPECT_EQ(z1["exit_code"], 0);
  EXPECT_EQ(z1["model"]["quotient_dim"], 7);
  EXPECT_EQ(z1["model"]["wandering_dim"], 1);

  c.degree = 5;
  const CommandOutput diag = cmd_hardy(write("d.json", R"({"kind":"blockdiag","children":[
      {"kind":"monomial","exponent":[1,1]},{"kind":"unitary","n":2,"matrix":[[[1,0]]]}]})"), c);
  EXPECT_EQ(diag.exit_code, kExitOk);

  const CommandOutput half = cmd_hardy(write("h.json", R"({"kind":"product","factors":[
      {"kind":"monomial","exponent":[1]},{"kind":"unitary","matrix":[[[0.5,0]]]}]})"), c);
  EXPECT_EQ(half.exit_code, kExitSymbol);
}

TEST_F(Cli, DilateScalar) {
  const CommandOutput out = cmd_dilate(scalar_half(), cfg_);
  EXPECT_EQ(out.exit_code, kExitOk);
  for (const auto& chk : parse(out)["checks"]) EXPECT_TRUE(chk["pass"].get<bool>()) << chk;
}

TEST_F(Cli, CoincideIdentityAndRandom) {
  const std::string t = scalar_half();
  const json id = parse(cmd_coincide(t, write("u.json", R"({"matrix": [[[1, 0]]]})"), cfg_));
  EXPECT_EQ(id["exit_code"], 0);
  EXPECT_LE(id["coincidence"]["residual"].get<double>(), 1e-13);

  const auto node = gen::node_shift_model({cplx(0.3, 0.1)}, 3);
  const std::string nt = write("node.json", io::tuple_to_json(node.tuple));
  const std::string ru = write("r.json", R"({"random": true, "dim": 4})");
  RunConfig c = cfg_;
  c.window = 1;
  const CommandOutput a = cmd_coincide(nt, ru, c);
  const CommandOutput b = cmd_coincide(nt, ru, c);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(without_timing(a.report), without_timing(b.report));
  EXPECT_LE(parse(a)["coincidence"]["residual"].get<double>(), 1e-9);
}

TEST_F(Cli, CoincideRejectsBadUnitary) {
  const std::string t = scalar_half();
  EXPECT_EQ(cmd_coincide(t, write("u.json", R"({"random": true, "dim": 3})"), cfg_).exit_code,
            kExitUnitary);
  EXPECT_EQ(cmd_coincide(t, write("v.json", R"({"matrix": [[[0.5, 0]]]})"), cfg_).exit_code,
            kExitUnitary);
}

TEST_F(Cli, CsvHeaderAndRows) {
  RunConfig c = cfg_;
  c.format = Format::Csv;
  const CommandOutput out = cmd_classify(scalar_half(), c);
  EXPECT_EQ(out.report.substr(0, out.report.find('\n')), "check,value,threshold,pass");
  EXPECT_NE(out.report.find("\nmax_commutator,0,"), std::string::npos);
}

TEST(RunConfigTest, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.grid = 3;
  EXPECT_THROW(c.validate(), Error);
  c.grid = 8;
  c.window = -1;
  EXPECT_THROW(c.validate(), Error);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorCode::NotBeurling), kExitBeurling);
  EXPECT_EQ(exit_code_for(ErrorCode::NotSzego), kExitBeurling);
  EXPECT_EQ(exit_code_for(ErrorCode::NotPure), kExitBeurling);
  EXPECT_EQ(exit_code_for(ErrorCode::NotInner), kExitSymbol);
  EXPECT_EQ(exit_code_for(ErrorCode::NotUnitary), kExitUnitary);
  EXPECT_EQ(exit_code_for(ErrorCode::Parse), kExitInvalid);
  EXPECT_EQ(exit_code_for(ErrorCode::NotCommuting), kExitInvalid);
}

TEST(WithoutTiming, DropsOnlyTiming) {
  const std::string a = R"({"provenance": {"timing": {"timestamp": "x"}, "version": "1"}, "v": 1})";
  const std::string b = R"({"provenance": {"timing": {"timestamp": "y"}, "version": "1"}, "v": 1})";
  EXPECT_EQ(without_timing(a), without_timing(b));
  EXPECT_NE(without_timing(a).find("version"), std::string::npos);
}

TEST(Suite, FailsUnderImpossibleTolerance) {
  RunConfig c;
  c.tol.structural = 1e-20;
  EXPECT_EQ(cmd_suite(c).exit_code, kExitSuiteFailure);
}

TEST(Suite, PassesAndIsDeterministic) {
  RunConfig c;
  c.seed = 7;
  const CommandOutput a = cmd_suite(c);
  const CommandOutput b = cmd_suite(c);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(without_timing(a.report), without_timing(b.report));
  const json r = json::parse(a.report);
  EXPECT_EQ(r["criteria"].size(), 11u);
  EXPECT_TRUE(r["all_pass"].get<bool>());
}

}  // namespace
