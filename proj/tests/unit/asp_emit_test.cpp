#include <gtest/gtest.h>

#include <sstream>

#include "dung/apx.hpp"
#include "dung/asp_emit.hpp"
#include "fixtures.hpp"
#include "listed_rules.hpp"

namespace dung {
namespace {

std::vector<std::string> rule_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '%') out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  const auto lines = rule_lines(text);
  return std::find(lines.begin(), lines.end(), line) != lines.end();
}

TEST(AspEmit, TagsRoundTrip) {
  for (EncodingId id : kAllEncodings) EXPECT_EQ(parse_encoding(to_string(id)), id);
  EXPECT_FALSE(parse_encoding("prf"));
}

TEST(AspEmit, InstanceFacts) {
  const Framework af = test::example1();
  EXPECT_EQ(rule_lines(emit_instance(af)).size(), 14u);
  EXPECT_EQ(emit_instance(Framework()), "");
  EXPECT_EQ(parse_apx(emit_instance(af)), af);
}

TEST(AspEmit, CfHasExactlyThreeRules) {
  const auto rules = rule_lines(emit_encoding(EncodingId::kCf));
  EXPECT_EQ(rules, test::listed_modules().at("cf"));
}

TEST(AspEmit, MatchesGoldenFiles) {
  for (EncodingId id : kAllEncodings) {
    const auto path = test::golden_dir() / (std::string(to_string(id)) + ".lp");
    EXPECT_EQ(emit_encoding(id), test::read_file(path)) << path;
  }
}

TEST(AspEmit, ListedRulesPresent) {
  for (EncodingId id : kAllEncodings) {
    const std::string text = emit_encoding(id);
    const auto comp = test::listed_composition(id);
    for (const std::string& module : comp.modules)
      for (const std::string& rule : test::listed_modules().at(module))
        EXPECT_TRUE(has_line(text, rule)) << to_string(id) << " lacks " << rule;
    for (const std::string& extra : comp.extra) EXPECT_TRUE(has_line(text, extra)) << to_string(id) << " lacks " << extra;
  }
}

TEST(AspEmit, OptimizationMarkersOnlyOnMetasp) {
  for (EncodingId id : kAllEncodings) {
    const std::string text = emit_encoding(id);
    const bool opt = is_optimization(id);
    EXPECT_EQ(text.find("optimize(1,1,incl).") != std::string::npos, opt) << to_string(id);
    EXPECT_EQ(text.find("#minimize") != std::string::npos, opt) << to_string(id);
  }
}

TEST(AspEmit, ReconstructedModulesAreMarked) {
  const std::string text = emit_encoding(EncodingId::kGrdStarHandcraft);
  EXPECT_NE(text.find("% reconstructed: order"), std::string::npos);
  EXPECT_NE(text.find("% reconstructed: defendedN"), std::string::npos);
  EXPECT_EQ(emit_encoding(EncodingId::kCf).find("reconstructed"), std::string::npos);
}

TEST(AspEmit, Jobs) {
  const Framework af = test::example1();
  const AspJob cf = emit_job(af, EncodingId::kCf);
  EXPECT_FALSE(cf.is_optimization);
  EXPECT_EQ(cf.semantics, Semantics::kCf);
  EXPECT_EQ(cf.text(), emit_instance(af) + emit_encoding(EncodingId::kCf));

  const AspJob prf = emit_job(af, EncodingId::kPrfMetasp);
  EXPECT_TRUE(prf.is_optimization);
  EXPECT_EQ(prf.semantics, Semantics::kPrf);
  EXPECT_NE(prf.text().find("#minimize[out]"), std::string::npos);
  EXPECT_NE(prf.text().find("optimize(1,1,incl)."), std::string::npos);

  EXPECT_EQ(emit_job(Framework(), EncodingId::kCf).instance_text, "");
}

TEST(AspEmit, RealizedSemantics) {
  EXPECT_EQ(realized_semantics(EncodingId::kStgSaturation), Semantics::kStg);
  EXPECT_EQ(realized_semantics(EncodingId::kSemMetasp), Semantics::kSem);
  EXPECT_EQ(realized_semantics(EncodingId::kGrdStarHandcraft), Semantics::kGrdStar);
  EXPECT_EQ(realized_semantics(EncodingId::kRgroundMetaspPrime), Semantics::kGrdStar);
}

TEST(AspEmit, Deterministic) {
  for (EncodingId id : kAllEncodings) EXPECT_EQ(emit_encoding(id), emit_encoding(id));
}

}  // namespace
}  // namespace dung
