#include <gtest/gtest.h>

#include <chrono>

#include "dung/error.hpp"
#include "dung/generators.hpp"
#include "dung/semantics.hpp"
#include "fixtures.hpp"

namespace dung {
namespace {

using test::example1;
using test::sets;
using test::show;

TEST(Semantics, TagsRoundTrip) {
  for (Semantics s : kAllSemantics) EXPECT_EQ(parse_semantics(to_string(s)), s);
  EXPECT_EQ(parse_semantics("grd*"), Semantics::kGrdStar);
  EXPECT_FALSE(parse_semantics("ideal"));
}

TEST(Semantics, Grounded) {
  const Framework af = example1();
  EXPECT_EQ(grounded(af), af.set_of({"a"}));
  EXPECT_TRUE(grounded(Framework()).empty());
  const Framework loop = test::make_af({"x"}, {{"x", "x"}});
  EXPECT_TRUE(grounded(loop).empty());
}

TEST(Semantics, GroundedIsLeastFixpointOfCharacteristic) {
  for (const auto& entry : test::small_corpus()) {
    const Framework& af = entry.af;
    ArgSet s = af.empty_set();
    for (ArgSet next = characteristic(af, s); next != s; next = characteristic(af, s)) s = next;
    EXPECT_EQ(grounded(af), s);
  }
}

TEST(Semantics, Example1Extensions) {
  const Framework af = example1();
  const ExtensionSet two = sets(af, {{"a", "d", "f"}, {"a", "c", "f"}});
  EXPECT_EQ(enumerate(af, Semantics::kStb), two);
  EXPECT_EQ(enumerate(af, Semantics::kPrf), two);
  EXPECT_EQ(enumerate(af, Semantics::kSem), two);
  EXPECT_EQ(enumerate(af, Semantics::kStg), two);
  EXPECT_EQ(enumerate(af, Semantics::kGrdStar), two);
  EXPECT_EQ(enumerate(af, Semantics::kCom), sets(af, {{"a"}, {"a", "c", "f"}, {"a", "d", "f"}}));
  EXPECT_EQ(enumerate(af, Semantics::kGrd), sets(af, {{"a"}}));
  EXPECT_EQ(enumerate(af, Semantics::kAdm),
            sets(af, {{}, {"a"}, {"c"}, {"a", "c"}, {"a", "d"}, {"c", "f"}, {"a", "c", "f"}, {"a", "d", "f"}}));
  EXPECT_EQ(enumerate(af, Semantics::kCf).size(), 17u);
}

TEST(Semantics, CanonicalOrderOfExample1) {
  const Framework af = example1();
  const ExtensionSet adm = enumerate(af, Semantics::kAdm);
  std::vector<std::string> printed;
  for (const ArgSet& s : adm) printed.push_back(af.format(s));
  EXPECT_EQ(printed, (std::vector<std::string>{"", "a", "c", "a,c", "a,d", "c,f", "a,c,f", "a,d,f"}));
}

TEST(Semantics, SelfAttackOnly) {
  const Framework af = test::make_af({"x"}, {{"x", "x"}});
  EXPECT_TRUE(enumerate(af, Semantics::kStb).empty());
  EXPECT_EQ(enumerate(af, Semantics::kPrf), sets(af, {{}}));
  EXPECT_EQ(enumerate(af, Semantics::kStg), sets(af, {{}}));
  const auto x = af.id_of("x");
  EXPECT_TRUE(skeptical(af, Semantics::kStb, x));
  EXPECT_FALSE(credulous(af, Semantics::kStb, x));
  EXPECT_FALSE(credulous(af, Semantics::kCf, x));
}

TEST(Semantics, EmptyFramework) {
  const Framework af;
  for (Semantics s : kAllSemantics) {
    EXPECT_EQ(enumerate(af, s), sets(af, {{}})) << to_string(s);
    EXPECT_EQ(brute_force(af, s), sets(af, {{}})) << to_string(s);
  }
}

TEST(Semantics, BruteForceOnExample1) {
  const Framework af = example1();
  EXPECT_EQ(brute_force(af, Semantics::kSem), sets(af, {{"a", "d", "f"}, {"a", "c", "f"}}));
  for (Semantics s : kAllSemantics) EXPECT_EQ(brute_force(af, s), enumerate(af, s)) << to_string(s);
}

TEST(Semantics, Seed42AgreesWithOracle) {
  GenSpec spec;
  spec.n = 8;
  spec.p = 0.3;
  spec.seed = 42;
  const Framework af = generate(spec);
  for (Semantics s : kAllSemantics) {
    const ExtensionSet a = enumerate(af, s);
    const ExtensionSet b = brute_force(af, s);
    EXPECT_EQ(a, b) << to_string(s) << ": " << show(af, a) << " vs " << show(af, b);
  }
}

TEST(Semantics, OracleOnSampledCorpus) {
  const auto corpus = test::small_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 7) {
    const Framework& af = corpus[i].af;
    for (Semantics s : kAllSemantics)
      EXPECT_EQ(enumerate(af, s), brute_force(af, s)) << to_string(s) << " seed " << corpus[i].spec.seed;
  }
}

TEST(Semantics, Verify) {
  const Framework af = example1();
  EXPECT_TRUE(verify(af, Semantics::kPrf, af.set_of({"a", "c", "f"})));
  EXPECT_FALSE(verify(af, Semantics::kPrf, af.set_of({"a", "c"})));
  EXPECT_TRUE(verify(af, Semantics::kAdm, af.set_of({"a", "c"})));
  EXPECT_FALSE(verify(af, Semantics::kStb, af.empty_set()));
  EXPECT_TRUE(verify(af, Semantics::kGrdStar, af.set_of({"a", "d", "f"})));
  EXPECT_FALSE(verify(af, Semantics::kGrdStar, af.set_of({"a"})));
  EXPECT_TRUE(verify(af, Semantics::kSem, af.set_of({"a", "c", "f"})));
  EXPECT_FALSE(verify(af, Semantics::kStg, af.set_of({"a", "c"})));
}

TEST(Semantics, CredulousAndSkeptical) {
  const Framework af = example1();
  EXPECT_TRUE(credulous(af, Semantics::kStb, af.id_of("c")));
  EXPECT_FALSE(credulous(af, Semantics::kPrf, af.id_of("b")));
  EXPECT_TRUE(credulous(af, Semantics::kGrd, af.id_of("a")));
  EXPECT_TRUE(skeptical(af, Semantics::kPrf, af.id_of("a")));
  EXPECT_FALSE(skeptical(af, Semantics::kStb, af.id_of("c")));
  EXPECT_TRUE(skeptical(af, Semantics::kStb, af.id_of("f")));
  EXPECT_FALSE(skeptical(af, Semantics::kAdm, af.id_of("a")));
}

TEST(Semantics, DecisionTasksMatchEnumerationOnSample) {
  const auto corpus = test::small_corpus();
  for (std::size_t i = 0; i < corpus.size(); i += 11) {
    const Framework& af = corpus[i].af;
    if (af.size() > 8) continue;
    for (Semantics s : kAllSemantics) {
      const ExtensionSet ext = enumerate(af, s);
      for (ArgId a = 0; a < af.size(); ++a) {
        const bool some = std::any_of(ext.begin(), ext.end(), [&](const ArgSet& e) { return e.contains(a); });
        const bool all = std::all_of(ext.begin(), ext.end(), [&](const ArgSet& e) { return e.contains(a); });
        EXPECT_EQ(credulous(af, s, a), some) << to_string(s);
        EXPECT_EQ(skeptical(af, s, a), all) << to_string(s);
      }
      for (const ArgSet& u : test::all_subsets(af)) EXPECT_EQ(verify(af, s, u), ext.contains(u)) << to_string(s);
    }
  }
}

TEST(Semantics, CapsAreReported) {
  GenSpec spec;
  spec.n = 30;
  spec.p = 0.1;
  const Framework af = generate(spec);
  EXPECT_THROW(enumerate(af, Semantics::kCf), CapExceeded);
  EXPECT_THROW(brute_force(af, Semantics::kCf), CapExceeded);
  EXPECT_NO_THROW(enumerate(af, Semantics::kGrd));
  SolveOptions wide;
  wide.max_arguments = 30;
  EXPECT_NO_THROW(enumerate(af, Semantics::kStb, wide));
}

TEST(Semantics, DeadlineStopsEnumeration) {
  GenSpec spec;
  spec.n = 26;
  spec.p = 0.02;
  const Framework af = generate(spec);
  SolveOptions options;
  options.deadline = Deadline::after(std::chrono::milliseconds(1));
  EXPECT_THROW(enumerate(af, Semantics::kStg, options), Timeout);
}

TEST(Semantics, RejectsForeignSets) {
  const Framework af = example1();
  EXPECT_THROW(verify(af, Semantics::kCf, ArgSet(3)), std::invalid_argument);
}

}  // namespace
}  // namespace dung
