#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/temp_dir.hpp"
#include "zariski/config_io.hpp"

namespace zariski {
namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorKind::Io;
}

std::string parse_message(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ConfigIo, ParsesCubicCone) {
  const auto doc = parse_config_text(R"({
    "exceptional": [{"name": "E", "self_intersection": -3, "genus": 1}],
    "strict_transforms": [{"name": "F1", "meets": {"E": 1}}],
    "divisor": {"F1": "1", "E": "2/4"},
    "G": {"E": 1}
  })");
  ASSERT_EQ(doc.config.exceptional.size(), 1u);
  EXPECT_EQ(doc.config.exceptional[0], (ExceptionalCurve{"E", -3, 1}));
  EXPECT_TRUE(doc.config.edges.empty());
  EXPECT_EQ(doc.divisor, (QDivisor{{"F1", 1}, {"E", Rational(1, 2)}}));
  ASSERT_TRUE(doc.g.has_value());
  EXPECT_EQ(*doc.g, (QDivisor{{"E", 1}}));
}

TEST(ConfigIo, GenusDefaultsToZero) {
  const auto doc = parse_config_text(R"({"exceptional": [{"name": "E", "self_intersection": -2}]})");
  EXPECT_EQ(doc.config.exceptional[0].genus, 0);
  EXPECT_TRUE(doc.divisor.is_zero());
  EXPECT_FALSE(doc.g.has_value());
}

TEST(ConfigIo, UnknownKeysAreNamed) {
  EXPECT_NE(parse_message(R"({"exceptional": [], "colour": 1})").find("\"colour\""),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"exceptional": [{"name": "E", "self_intersection": -2, "gneus": 0}]})")
                .find("\"gneus\""),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"exceptional": [{"name": "E", "self_intersection": -2}],
      "strict_transforms": [{"name": "F", "meet": {}}]})")
                .find("\"meet\""),
            std::string::npos);
}

TEST(ConfigIo, Rejections) {
  EXPECT_EQ(parse_error("{"), ErrorKind::Parse);
  EXPECT_EQ(parse_error("[]"), ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({})"), ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"exceptional": [{"name": "E", "self_intersection": -2.5}]})"),
            ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"exceptional": [{"name": 3, "self_intersection": -2}]})"),
            ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"exceptional": [], "edges": [["A", "B"]]})"), ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"exceptional": [], "divisor": {"E": "1/0"}})"), ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"exceptional": [], "divisor": {"E": 0.5}})"), ErrorKind::Parse);
  EXPECT_EQ(parse_error(R"({"exceptional": [], "divisor": ["E"]})"), ErrorKind::Parse);
}

TEST(ConfigIo, RoundTripsRandomDocuments) {
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    ConfigDocument doc;
    doc.config = testing::random_config(rng);
    const auto cfg = validate_config(doc.config);
    doc.divisor = testing::random_effective(rng, cfg);
    if (i % 2) doc.g = testing::random_exceptional(rng, cfg, i % 4 == 1 ? 1 : 5);
    const std::string text = emit_config(doc).dump();
    EXPECT_EQ(parse_config_text(text), doc);
    EXPECT_EQ(emit_config(parse_config_text(text)).dump(), text);
  }
}

TEST(ConfigIo, GFileShapes) {
  testing::TempDir dir;
  EXPECT_EQ(load_g_file(dir.write("bare.json", R"({"E": 2})")), (QDivisor{{"E", 2}}));
  EXPECT_EQ(load_g_file(dir.write("wrapped.json", R"({"G": {"E": 3}})")), (QDivisor{{"E", 3}}));
  EXPECT_EQ(load_g_file(dir.write("config.json",
                                  R"({"exceptional": [{"name": "E", "self_intersection": -1}],
                                      "G": {"E": "4"}})")),
            (QDivisor{{"E", 4}}));
  EXPECT_THROW(load_g_file(dir.path() / "missing.json"), Error);
}

TEST(ConfigIo, MissingFileIsIoError) {
  try {
    load_config("/nonexistent/zariski.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

}  // namespace
}  // namespace zariski
