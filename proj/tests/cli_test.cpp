#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "support/corpus.hpp"
#include "support/temp_dir.hpp"
#include "zariski/commands.hpp"
#include "zariski/config_io.hpp"

namespace zariski::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kData = ZARISKI_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

Run check(const fs::path& p, OutputFormat fmt = OutputFormat::Text) {
  return run([&](auto& o, auto& e) { return cmd_check(p, fmt, o, e); });
}
Run decompose(const fs::path& p, bool oracle) {
  return run([&](auto& o, auto& e) { return cmd_decompose(p, oracle, OutputFormat::Json, o, e); });
}
Run classify(const fs::path& p, GOption g = {}, OutputFormat fmt = OutputFormat::Json) {
  return run([&](auto& o, auto& e) { return cmd_classify(p, g, fmt, o, e); });
}
Run fundcycle(const fs::path& p) {
  return run([&](auto& o, auto& e) { return cmd_fundcycle(p, OutputFormat::Json, o, e); });
}
Run batch(const fs::path& dir, std::size_t jobs, std::optional<fs::path> out_dir = {}) {
  return run([&](auto& o, auto& e) { return cmd_batch(dir, {jobs, out_dir}, o, e); });
}

TEST(CmdCheck, Valid) {
  const auto r = check(kData / "cubic_cone.json");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("leading minors: [-3]"), std::string::npos) << r.out;
  const auto j = check(kData / "a2_chain.json", OutputFormat::Json).doc();
  EXPECT_EQ(j["leading_minors"], json::array({"-2", "3"}));
  EXPECT_EQ(j["minor_signs"], json::array({"-", "+"}));
}

TEST(CmdCheck, Failures) {
  const auto zero = check(kData / "zero_self.json");
  EXPECT_EQ(zero.code, kExitValidation);
  EXPECT_NE(zero.err.find("NonNegativeSelfIntersection: E1"), std::string::npos) << zero.err;
  EXPECT_EQ(check(kData / "malformed.json").code, kExitIoOrParse);
  EXPECT_EQ(check(kData / "does_not_exist.json").code, kExitIoOrParse);
}

TEST(CmdDecompose, Outputs) {
  const auto cone = decompose(kData / "cubic_cone.json", false);
  ASSERT_EQ(cone.code, kExitOk) << cone.err;
  EXPECT_EQ(cone.doc()["b"], (json{{"E", "1"}}));
  EXPECT_EQ(cone.doc()["delta"], (json{{"E", "1"}, {"F1", "1"}, {"F2", "1"}, {"F3", "1"}}));
  EXPECT_FALSE(cone.doc().contains("oracle_agreement"));

  const auto single = decompose(kData / "single_minus2.json", false);
  EXPECT_EQ(single.doc()["b"], json::object());

  const auto a2 = decompose(kData / "a2_chain.json", true);
  ASSERT_EQ(a2.code, kExitOk) << a2.err;
  EXPECT_EQ(a2.doc()["oracle_agreement"], true);
  EXPECT_EQ(a2.doc()["b"], (json{{"E1", "2/3"}, {"E2", "1/3"}}));
  EXPECT_EQ(a2.doc()["certificate"]["antinef_ok"], true);
  EXPECT_EQ(a2.doc()["certificate"]["support_orthogonality_ok"], true);
}

TEST(CmdDecompose, OracleFlagOnlyAddsAgreement) {
  for (const char* name : {"cubic_cone.json", "a2_chain.json", "e8.json", "a3_chain.json"}) {
    json plain = decompose(kData / name, false).doc();
    json checked = decompose(kData / name, true).doc();
    checked.erase("oracle_agreement");
    EXPECT_EQ(plain.dump(), checked.dump()) << name;
  }
}

TEST(CmdDecompose, NotEffective) {
  testing::TempDir dir;
  const auto p = dir.write("neg.json", R"({"exceptional": [{"name": "E", "self_intersection": -2}],
      "divisor": {"E": "-1"}})");
  const auto r = decompose(p, false);
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("NotEffective"), std::string::npos);
}

TEST(CmdClassify, CubicCone) {
  const auto r = classify(kData / "cubic_cone.json");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = r.doc();
  EXPECT_EQ(j["spread"], "ZeroOrOne");
  EXPECT_EQ(j["symbolic_form"], json::parse(R"([["F1","1"],["F2","1"],["F3","1"]])"));
  EXPECT_EQ(j["hilbert"]["alpha"], "0");
  EXPECT_EQ(j["g_provenance"], "fundamental_cycle");
  EXPECT_EQ(j["mr_associated_eventually"], false);
  EXPECT_EQ(j["redundant_exceptional"], json::array({"E"}));
  EXPECT_EQ(j["caveats"].size(), 3u);
  EXPECT_TRUE(j["spread_one_certificate"].is_null());
}

TEST(CmdClassify, SingleCurveSpreadTwo) {
  const json j = classify(kData / "single_minus2.json").doc();
  EXPECT_EQ(j["spread"], "Two");
  EXPECT_EQ(j["hilbert"]["alpha"], "2");
  EXPECT_TRUE(j["symbolic_form"].is_null());
  EXPECT_EQ(j["negative_wall"], json::array({"E"}));
}

TEST(CmdClassify, UserG) {
  const auto r = classify(kData / "cubic_cone.json", std::string((kData / "g_twice_e.json").string()));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.doc()["hilbert"]["alpha"], "0");
  EXPECT_EQ(r.doc()["g_provenance"], "user");
  EXPECT_EQ(r.doc()["hilbert"]["G"], (json{{"E", "2"}}));

  testing::TempDir dir;
  const auto bad = dir.write("g.json", R"({"F1": 1})");
  const auto rejected = classify(kData / "cubic_cone.json", bad.string());
  EXPECT_EQ(rejected.code, kExitValidation);
  EXPECT_NE(rejected.err.find("InvalidUserG"), std::string::npos);
}

TEST(CmdClassify, FileGAndFundOverride) {
  testing::TempDir dir;
  const auto p = dir.write("with_g.json", R"({"exceptional": [{"name": "E", "self_intersection": -2}],
      "divisor": {"E": "1"}, "G": {"E": 3}})");
  EXPECT_EQ(classify(p).doc()["hilbert"]["alpha"], "6");
  EXPECT_EQ(classify(p).doc()["g_provenance"], "user");
  EXPECT_EQ(classify(p, std::string("fund")).doc()["hilbert"]["alpha"], "2");
}

TEST(CmdClassify, TextFormat) {
  const auto r = classify(kData / "cubic_cone.json", {}, OutputFormat::Text);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("analytic spread: 0 or 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Q_F1^(ceil(n*1))"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("alpha = 0"), std::string::npos) << r.out;
}

TEST(CmdFundcycle, Outputs) {
  const json a3 = fundcycle(kData / "a3_chain.json").doc();
  EXPECT_EQ(a3["Z"], (json{{"E1", 1}, {"E2", 1}, {"E3", 1}}));
  EXPECT_EQ(a3["laufer_steps"], 0);
  const json e8 = fundcycle(kData / "e8.json").doc();
  EXPECT_EQ(e8["Z"], (json{{"E1", 2}, {"E2", 3}, {"E3", 4}, {"E4", 6},
                           {"E5", 5}, {"E6", 4}, {"E7", 3}, {"E8", 2}}));
  EXPECT_EQ(fundcycle(kData / "single_minus3.json").doc()["Z"], (json{{"E", 1}}));
}

TEST(CmdBatch, ValidInvalidAndEmpty) {
  testing::TempDir dir;
  for (const char* name : {"cubic_cone.json", "a2_chain.json", "e8.json"}) {
    fs::copy_file(kData / name, dir.path() / name);
  }
  const auto ok = batch(dir.path(), 2);
  EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("3 processed, 0 failed"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir.path() / "reports" / "e8.report.json"));

  fs::remove(dir.path() / "e8.json");
  fs::copy_file(kData / "zero_self.json", dir.path() / "zero_self.json");
  const fs::path out = dir.path() / "second";
  const auto mixed = batch(dir.path(), 1, out);
  EXPECT_EQ(mixed.code, kExitValidation);
  EXPECT_NE(mixed.out.find("zero_self.json: error(2) NonNegativeSelfIntersection: E1"),
            std::string::npos)
      << mixed.out;
  std::size_t reports = 0;
  for (const auto& entry : fs::directory_iterator(out)) reports += entry.path().extension() == ".json";
  EXPECT_EQ(reports, 2u);

  testing::TempDir empty;
  const auto none = batch(empty.path(), 4);
  EXPECT_EQ(none.code, kExitOk);
  EXPECT_EQ(none.out, "0 processed, 0 failed\n");

  EXPECT_EQ(batch(dir.path() / "missing", 1).code, kExitIoOrParse);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorKind::Io), kExitIoOrParse);
  EXPECT_EQ(exit_code_for(ErrorKind::Parse), kExitIoOrParse);
  EXPECT_EQ(exit_code_for(ErrorKind::NotNegativeDefinite), kExitValidation);
  EXPECT_EQ(exit_code_for(ErrorKind::InvalidUserG), kExitValidation);
  EXPECT_EQ(exit_code_for(ErrorKind::OracleDisagreement), kExitInternal);
  EXPECT_EQ(exit_code_for(ErrorKind::FuseExceeded), kExitInternal);
  EXPECT_EQ(exit_code_for(ErrorKind::NoFeasibleSupport), kExitInternal);
}

}  // namespace
}  // namespace zariski::cli
