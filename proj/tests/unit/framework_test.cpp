#include <gtest/gtest.h>

#include "dung/error.hpp"
#include "dung/framework.hpp"
#include "fixtures.hpp"

namespace dung {
namespace {

using test::example1;
using test::make_af;

TEST(Framework, Example1Shape) {
  const Framework af = example1();
  EXPECT_EQ(af.size(), 6u);
  EXPECT_EQ(af.attacks().size(), 8u);
  EXPECT_TRUE(af.has_attack(af.id_of("c"), af.id_of("d")));
  EXPECT_TRUE(af.has_attack(af.id_of("d"), af.id_of("c")));
  EXPECT_FALSE(af.has_attack(af.id_of("b"), af.id_of("a")));
  EXPECT_EQ(af.format(af.attacker_set(af.id_of("e"))), "c,d");
  EXPECT_EQ(af.format(af.target_set(af.id_of("c"))), "b,d,e");
}

TEST(Framework, AttacksSortedAndDeduplicated) {
  const Framework af({"x", "y"}, {{1, 0}, {0, 1}, {1, 0}});
  ASSERT_EQ(af.attacks().size(), 2u);
  EXPECT_EQ(af.attacks()[0], (Attack{0, 1}));
  EXPECT_EQ(af.attacks()[1], (Attack{1, 0}));
  EXPECT_EQ(af.attackers(0).size(), 1u);
}

TEST(Framework, RejectsBadInput) {
  EXPECT_THROW(Framework({"a", "a"}, {}), InvalidFramework);
  EXPECT_THROW(Framework({"A"}, {}), InvalidFramework);
  EXPECT_THROW(Framework({"1a"}, {}), InvalidFramework);
  EXPECT_THROW(Framework({"a"}, {{0, 1}}), InvalidFramework);
  EXPECT_THROW(example1().id_of("zz"), InvalidFramework);
  EXPECT_THROW(example1().set_of({"zz"}), InvalidFramework);
}

TEST(Framework, NameRules) {
  EXPECT_TRUE(is_valid_argument_name("a"));
  EXPECT_TRUE(is_valid_argument_name("a1_2"));
  EXPECT_FALSE(is_valid_argument_name(""));
  EXPECT_FALSE(is_valid_argument_name("_a"));
  EXPECT_FALSE(is_valid_argument_name("a-b"));
  EXPECT_FALSE(is_valid_argument_name("Ab"));
}

TEST(Framework, AttackedBy) {
  const Framework af = example1();
  EXPECT_EQ(attacked_by(af, af.set_of({"a", "d", "f"})), af.set_of({"b", "c", "e"}));
  EXPECT_EQ(attacked_by(af, af.set_of({"c"})), af.set_of({"b", "d", "e"}));
  EXPECT_TRUE(attacked_by(af, af.empty_set()).empty());
}

TEST(Framework, Range) {
  const Framework af = example1();
  EXPECT_EQ(range_of(af, af.set_of({"a", "d", "f"})), af.all());
  EXPECT_EQ(range_of(af, af.set_of({"a"})), af.set_of({"a", "b"}));
  EXPECT_TRUE(range_of(af, af.empty_set()).empty());
}

TEST(Framework, AttackersOf) {
  const Framework af = example1();
  EXPECT_EQ(attackers_of(af, af.set_of({"b", "f"})), af.set_of({"a", "c", "e"}));
}

TEST(Framework, ConflictFree) {
  const Framework af = example1();
  EXPECT_TRUE(is_conflict_free(af, af.set_of({"a", "c", "f"})));
  EXPECT_FALSE(is_conflict_free(af, af.set_of({"c", "d"})));
  EXPECT_TRUE(is_conflict_free(af, af.empty_set()));
  const Framework loop = make_af({"x"}, {{"x", "x"}});
  EXPECT_FALSE(is_conflict_free(loop, loop.all()));
}

TEST(Framework, Characteristic) {
  const Framework af = example1();
  EXPECT_EQ(characteristic(af, af.empty_set()), af.set_of({"a"}));
  EXPECT_EQ(characteristic(af, af.set_of({"a"})), af.set_of({"a"}));
  const Framework single({"x"}, {});
  EXPECT_EQ(characteristic(single, single.empty_set()), single.all());
}

TEST(Framework, MonotoneOperatorsOnRandomFrameworks) {
  for (const auto& entry : test::small_corpus()) {
    const Framework& af = entry.af;
    if (af.size() > 7) continue;
    const auto subsets = test::all_subsets(af);
    for (std::size_t i = 0; i < subsets.size(); i += 3) {
      const ArgSet& s = subsets[i];
      EXPECT_TRUE(s.is_subset_of(range_of(af, s)));
      const ArgSet t = s | subsets[(i * 7 + 1) % subsets.size()];
      EXPECT_TRUE(attacked_by(af, s).is_subset_of(attacked_by(af, t)));
      EXPECT_TRUE(characteristic(af, s).is_subset_of(characteristic(af, t)));
    }
  }
}

TEST(Framework, RestrictKeepsNamesAndInducedAttacks) {
  const Framework af = example1();
  const Restriction r = restrict(af, af.set_of({"c", "d"}));
  EXPECT_EQ(r.framework.names(), (std::vector<std::string>{"c", "d"}));
  ASSERT_EQ(r.framework.attacks().size(), 2u);
  EXPECT_TRUE(r.framework.has_attack(0, 1));
  EXPECT_TRUE(r.framework.has_attack(1, 0));
  EXPECT_EQ(r.to_parent, (std::vector<ArgId>{2, 3}));
  EXPECT_EQ(r.lift(r.framework.set_of({"d"})), af.set_of({"d"}));
  EXPECT_EQ(r.project(af.set_of({"a", "d", "f"})), r.framework.set_of({"d"}));
}

TEST(Framework, RestrictToAllAndNothing) {
  const Framework af = example1();
  EXPECT_EQ(restrict(af, af.all()).framework, af);
  const Restriction none = restrict(af, af.empty_set());
  EXPECT_TRUE(none.framework.empty());
  EXPECT_TRUE(none.framework.attacks().empty());
  EXPECT_EQ(none.lift(none.framework.empty_set()), af.empty_set());
}

TEST(Framework, FormatUsesCanonicalOrder) {
  const Framework af = example1();
  EXPECT_EQ(af.format(af.set_of({"f", "a", "c"})), "a,c,f");
  EXPECT_EQ(af.format(af.set_of({"f", "a"}), " "), "a f");
  EXPECT_EQ(af.format(af.empty_set()), "");
}

}  // namespace
}  // namespace dung
