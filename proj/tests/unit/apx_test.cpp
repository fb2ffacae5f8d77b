#include <gtest/gtest.h>

#include "dung/apx.hpp"
#include "dung/error.hpp"
#include "fixtures.hpp"

namespace dung {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_apx(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

TEST(Apx, ParsesMinimalInstance) {
  const Framework af = parse_apx("arg(a). arg(b). defeat(a,b).");
  EXPECT_EQ(af.names(), (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(af.attacks().size(), 1u);
  EXPECT_TRUE(af.has_attack(0, 1));
}

TEST(Apx, ReadsExample1File) {
  const Framework af = read_apx_file(test::data_dir() / "example1.apx");
  EXPECT_EQ(af.size(), 6u);
  EXPECT_EQ(af.attacks().size(), 8u);
  EXPECT_EQ(af, test::example1());
}

TEST(Apx, CommentsWhitespaceAndAttSynonym) {
  const Framework af = parse_apx(
      "% header\n"
      "arg( x ) .  arg(y).% trailing\n"
      "\n\tatt(x , y).\n"
      "defeat(y,x). defeat(y,x).\n");
  EXPECT_EQ(af.size(), 2u);
  EXPECT_EQ(af.attacks().size(), 2u);
}

TEST(Apx, AttackMayPrecedeDeclaration) {
  const Framework af = parse_apx("arg(a). defeat(a,b). arg(b).");
  EXPECT_TRUE(af.has_attack(af.id_of("a"), af.id_of("b")));
}

TEST(Apx, UndeclaredArgument) {
  try {
    parse_apx("defeat(a,b).");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos) << e.what();
  }
}

TEST(Apx, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("arg(a).\narg(a).\n"), 2u);
  EXPECT_EQ(error_line("arg(a).\n\nfoo(a).\n"), 3u);
  EXPECT_EQ(error_line("arg(a).\narg(B).\n"), 2u);
  EXPECT_EQ(error_line("arg(a)\n"), 1u);
  EXPECT_EQ(error_line("arg(a).\narg(b).\ndefeat(a,b,c).\n"), 3u);
  EXPECT_EQ(error_line("arg(a).\n\n\ndefeat(a,zz).\n"), 4u);
  EXPECT_EQ(error_line("arg(a). #"), 1u);
}

TEST(Apx, MissingFile) { EXPECT_THROW(read_apx_file("/nonexistent/file.apx"), ParseError); }

TEST(Apx, SerializeExamples) {
  EXPECT_EQ(serialize_apx(Framework()), "");
  EXPECT_EQ(serialize_apx(test::make_af({"a"}, {{"a", "a"}})), "arg(a).\ndefeat(a,a).\n");
  const std::string text = serialize_apx(test::example1());
  EXPECT_EQ(text, test::read_file(test::data_dir() / "example1.apx"));
}

TEST(Apx, RoundTripOnGeneratedInstances) {
  for (const auto& entry : test::small_corpus()) {
    const std::string text = serialize_apx(entry.af);
    EXPECT_EQ(parse_apx(text), entry.af);
    EXPECT_EQ(serialize_apx(parse_apx(text)), text);
  }
}

}  // namespace
}  // namespace dung
