#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rauzy/classes.hpp"
#include "rauzy/moves.hpp"

using namespace rauzy;

namespace {

Letter L(const Pair& p, std::string_view name) { return p.alphabet().index(name); }

std::string after(const char* pair, const char* path) {
  const auto p = parse_pair(pair);
  return format_pair(apply_path(p, parse_path(path, p.alphabet())));
}

}  // namespace

TEST(InnerSwitch, Templates) {
  EXPECT_EQ(after("a b c z | z b c a", "inner(b,c)"), "a c b z | z c b a");
  EXPECT_EQ(after("a b s c z | z b s c a", "inner(b,c)"), "a s c b z | z s c b a");
}

TEST(OuterSwitch, Templates) {
  EXPECT_EQ(after("a d z | z d a", "outer_a(d)"), "d a z | z a d");
  EXPECT_EQ(after("a d z | z d a", "outer_z(d)"), "a z d | d z a");
}

TEST(OuterSwitch, TwoOuterSwitchesRotateTheCorners) {
  const auto p = parse_pair("a s z | z s a");
  const auto q = apply_path(p, parse_path("outer_z(s); outer_a(z)", p.alphabet()));
  EXPECT_EQ(q, rename(p, parse_cycles("(a,s,z)", p.alphabet())));
}

TEST(SwitchViolation, Reasons) {
  const auto p = parse_pair("a b c z | z b c a");
  EXPECT_FALSE(switch_violation(p, SwitchMove::inner(L(p, "b"), L(p, "c"))));
  EXPECT_TRUE(switch_violation(p, SwitchMove::inner(L(p, "c"), L(p, "b"))));
  EXPECT_TRUE(switch_violation(p, SwitchMove::inner(L(p, "a"), L(p, "c"))));
  EXPECT_TRUE(switch_violation(p, SwitchMove::outer_a(L(p, "z"))));
  EXPECT_TRUE(switch_violation(parse_pair("a b c | c a b"), SwitchMove::outer_a(1)));
  // b precedes c on top but not on bottom
  const auto r = parse_pair("a b c z | z c b a");
  EXPECT_TRUE(switch_violation(r, SwitchMove::inner(L(r, "b"), L(r, "c"))));
  EXPECT_THROW(apply_switch(r, SwitchMove::inner(L(r, "b"), L(r, "c"))), std::invalid_argument);
}

TEST(SwitchPath, FormatAndParse) {
  const auto p = parse_pair("a b c d z | z d c b a");
  const auto path = parse_path(" inner(b, c) ;outer_a(d);outer_z(b) ", p.alphabet());
  ASSERT_EQ(path.size(), 3u);
  EXPECT_EQ(format_path(path, p.alphabet()), "inner(b,c); outer_a(d); outer_z(b)");
  EXPECT_THROW(parse_path("inner(b)", p.alphabet()), ParseError);
  EXPECT_THROW(parse_path("outer_a(q)", p.alphabet()), ParseError);
  EXPECT_THROW(parse_path("sideways(b)", p.alphabet()), ParseError);
  EXPECT_THROW(parse_path("outer_a(b);", p.alphabet()), ParseError);
  EXPECT_TRUE(parse_path("", p.alphabet()).empty());
}

TEST(Mu, SingleSwitches) {
  const auto p = parse_pair("a b c z | z b c a");
  EXPECT_TRUE(mu_of_switch(p, SwitchMove::inner(L(p, "b"), L(p, "c"))).is_identity());
  const auto q = parse_pair("a d z | z d a");
  EXPECT_EQ(format_cycles(mu_of_path(q, {SwitchMove::outer_a(L(q, "d"))}), q.alphabet()), "(a,z,d)");
  EXPECT_TRUE(mu_of_path(q, {SwitchMove::outer_z(L(q, "d"))}).is_identity());
}

TEST(Mu, AlwaysEven) {
  for (const auto& p : oracle::all_standard(5)) {
    for (const auto& m1 : available_switches(p)) {
      const auto q = apply_switch(p, m1);
      for (const auto& m2 : available_switches(q)) ASSERT_TRUE(is_even(mu_of_path(p, {m1, m2})));
    }
  }
}

TEST(Mu, StructureTransportsAlongPaths) {
  // N(ωp) = N(p) ∗ μ_ω up to the centralizer: N(p)∗μ_ω and N(ωp) agree exactly
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& p : oracle::all_standard(n)) {
      const auto np = marked_structure(p);
      for (const auto& m1 : available_switches(p)) {
        const auto q = apply_switch(p, m1);
        ASSERT_EQ(marked_structure(q), act(np, mu_of_path(p, {m1}))) << format_pair(p);
        for (const auto& m2 : available_switches(q)) {
          const auto r = apply_switch(q, m2);
          ASSERT_EQ(marked_structure(r), act(np, mu_of_path(p, {m1, m2}))) << format_pair(p);
        }
      }
    }
  }
}

TEST(Realize, InnerSwitchStaysInRightClass) {
  const auto p = parse_pair("a b c z | z b c a");
  const auto target = parse_pair("a c b z | z c b a", p.alphabet_ptr());
  const auto w = induction_word(p, target, Flavor::right_only);
  EXPECT_FALSE(w.empty());
  EXPECT_EQ(induce(p, w), target);
  const auto witness = realize_switch(p, SwitchMove::inner(L(p, "b"), L(p, "c")));
  EXPECT_TRUE(witness.verified);
  EXPECT_EQ(induce(p, witness.word), target);
}

TEST(Realize, OuterSwitchNeedsLeftMoves) {
  const auto p = parse_pair("a d z | z d a");
  const auto w = realize_switch(p, SwitchMove::outer_a(L(p, "d")));
  ASSERT_TRUE(w.verified);
  EXPECT_FALSE(w.word.empty());
  EXPECT_TRUE(std::any_of(w.word.begin(), w.word.end(), [](Move m) { return m.side == Side::left; }));
  EXPECT_EQ(induce(p, w.word), w.target);
  EXPECT_FALSE(find_pattern(p, w.target, Flavor::right_only));
}

TEST(Realize, NoOpTargetGivesEmptyWord) {
  const auto p = parse_pair("a b c z | z b c a");
  EXPECT_TRUE(induction_word(p, p).empty());
}

TEST(Realize, AboveCapIsUnverified) {
  const auto p = parse_pair("a b c d e f g h | h g f e d c b a");
  const auto w = realize_switch(p, SwitchMove::outer_a(L(p, "c")));
  EXPECT_FALSE(w.verified);
  EXPECT_TRUE(w.word.empty());
}

TEST(Realize, EveryInnerSwitchIsARightClassMove) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& p : oracle::all_standard(n)) {
      const auto cls = rauzy_class(p);
      for (const auto& m : available_switches(p)) {
        if (m.kind == SwitchKind::inner) {
          ASSERT_TRUE(cls.contains(apply_switch(p, m))) << format_pair(p);
        }
      }
    }
  }
}
