#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rauzy/pair.hpp"

using namespace rauzy;

namespace {

constexpr const char* kSeven = "a b c d e f g | g c e b f d a";

Letter L(const Pair& p, std::string_view name) { return p.alphabet().index(name); }

}  // namespace

TEST(Parse, BasicAndFormatting) {
  const auto p = parse_pair("a b | b a");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.alphabet().names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(format_pair(p), "a b | b a");
  EXPECT_EQ(format_pair(parse_pair("  a   b|b a ")), "a b | b a");
}

TEST(Parse, NaturalOrderAlphabet) {
  const auto p = parse_pair("x10 x2 x1 | x1 x10 x2");
  EXPECT_EQ(p.alphabet().names(), (std::vector<std::string>{"x1", "x2", "x10"}));
}

TEST(Parse, ReduciblePairsParse) {
  const auto p = parse_pair("a b | a b");
  EXPECT_FALSE(is_irreducible(p));
}

TEST(Parse, ErrorsCarryColumns) {
  auto column = [](std::string_view text) -> std::size_t {
    try {
      parse_pair(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  EXPECT_EQ(column("a a | a a"), 3u);
  EXPECT_EQ(column("a b c | c b"), 7u);
  EXPECT_EQ(column("a b"), 4u);
  EXPECT_EQ(column("a b | b a | a"), 11u);
  EXPECT_EQ(column(" | a"), 1u);
  EXPECT_EQ(column("a b | b q"), 9u);
  EXPECT_EQ(column("a | "), 4u);
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(parse_pair("a b | b a")));
  EXPECT_FALSE(is_irreducible(parse_pair("a b c | a c b")));
  EXPECT_FALSE(is_irreducible(parse_pair("a b c | b a c")));
  EXPECT_TRUE(is_irreducible(parse_pair(kSeven)));
}

TEST(Irreducible, MatchesPrefixSetOracle) {
  auto al = std::make_shared<const Alphabet>(Alphabet::latin(5));
  std::vector<Letter> top{0, 1, 2, 3, 4}, bottom = top;
  do {
    const Pair p(al, top, bottom);
    ASSERT_EQ(is_irreducible(p), oracle::irreducible(oracle::words_of(p))) << format_pair(p);
  } while (std::next_permutation(bottom.begin(), bottom.end()));
}

TEST(Standard, Examples) {
  EXPECT_TRUE(is_standard(parse_pair("a b c | c b a")));
  EXPECT_TRUE(is_standard(parse_pair("a b | b a")));
  EXPECT_TRUE(is_standard(parse_pair(kSeven)));
  EXPECT_FALSE(is_standard(parse_pair("a b c | c a b")));
}

TEST(Induce, HandApplications) {
  const auto p = parse_pair("a b c | c b a");
  EXPECT_EQ(format_pair(induce(p, Side::right, Row::top)), "a b c | c a b");
  EXPECT_EQ(format_pair(induce(p, Side::right, Row::bottom)), "a c b | c b a");
  EXPECT_EQ(format_pair(induce(p, Side::left, Row::top)), "a b c | b c a");
  EXPECT_EQ(format_pair(induce(p, Side::left, Row::bottom)), "b a c | c b a");
}

TEST(Induce, RejectsReducible) { EXPECT_THROW(induce(parse_pair("a b | a b"), kAllMoves[0]), std::invalid_argument); }

TEST(Induce, EveryMoveHasFiniteOrbit) {
  for (const auto& p : oracle::all_irreducible_sorted_top(5)) {
    for (const auto m : kAllMoves) {
      auto q = induce(p, m);
      int steps = 1;
      while (!(q == p) && steps < 1000) {
        q = induce(q, m);
        ++steps;
      }
      ASSERT_EQ(q, p) << format_pair(p) << " " << to_string(m);
    }
  }
}

TEST(Induce, MatchesStringOracle) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& p : oracle::all_irreducible(n)) {
      for (const auto m : kAllMoves) {
        const auto expected = oracle::induce(oracle::words_of(p), m.side == Side::right, m.row == Row::top ? 0 : 1);
        ASSERT_EQ(oracle::words_of(induce(p, m)), expected);
        ASSERT_EQ(unpack(induce_packed(pack(p), m, n), p.alphabet_ptr()), induce(p, m));
      }
    }
  }
}

TEST(Induce, LeftIsMirrorOfRight) {
  // reversing both rows swaps left and right induction
  auto reversed = [](const Pair& p) {
    std::vector<Letter> t(p.word(Row::top).rbegin(), p.word(Row::top).rend());
    std::vector<Letter> b(p.word(Row::bottom).rbegin(), p.word(Row::bottom).rend());
    return Pair(p.alphabet_ptr(), t, b);
  };
  for (const auto& p : oracle::all_irreducible_sorted_top(5)) {
    for (auto row : {Row::top, Row::bottom}) {
      ASSERT_EQ(reversed(induce(p, Side::left, row)), induce(reversed(p), Side::right, row));
    }
  }
}

TEST(Rename, Examples) {
  const auto p = parse_pair("a b c | c b a");
  const auto nu = parse_cycles("(b,c)", p.alphabet());
  EXPECT_EQ(format_pair(rename(p, nu)), "a c b | b c a");
  EXPECT_EQ(rename(p, Permutation(3)), p);
  // p∘ν shows ν⁻¹(x) in place of x
  const auto q = parse_pair("a b c d | d c b a");
  const auto mu = parse_cycles("(a,b,c)", q.alphabet());
  EXPECT_EQ(format_pair(rename(q, mu)), "c a b d | d b a c");
}

TEST(Rename, ActionLawAndRecovery) {
  std::mt19937 rng(11);
  const auto pairs = oracle::all_irreducible_sorted_top(5);
  for (int i = 0; i < 300; ++i) {
    const auto& p = pairs[rng() % pairs.size()];
    std::vector<Letter> a{0, 1, 2, 3, 4}, b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation mu(a), nu(b);
    ASSERT_EQ(rename(rename(p, mu), nu), rename(p, mu * nu));
    ASSERT_EQ(renaming_between(p, rename(p, nu)), nu);
    ASSERT_EQ(to_nonlabeled(rename(p, nu)), to_nonlabeled(p));
    for (const auto m : kAllMoves) ASSERT_EQ(induce(rename(p, nu), m), rename(induce(p, m), nu));
  }
}

TEST(Nonlabeled, Examples) {
  EXPECT_EQ(format_nonlabeled(to_nonlabeled(parse_pair(kSeven))), "[7,4,2,6,3,5,1]");
  EXPECT_EQ(format_nonlabeled(to_nonlabeled(parse_pair("a b | b a"))), "[2,1]");
  const auto p = parse_pair(kSeven);
  const auto back = from_nonlabeled(to_nonlabeled(p), p.alphabet_ptr());
  EXPECT_EQ(to_nonlabeled(back), to_nonlabeled(p));
  EXPECT_EQ(unpack_nonlabeled(nonlabeled_key(pack(p), 7), 7), to_nonlabeled(p));
}

TEST(Nonlabeled, MatchesOneLineOracle) {
  for (const auto& p : oracle::all_irreducible(4)) {
    const auto pi = to_nonlabeled(p);
    const auto expected = oracle::one_line(oracle::words_of(p));
    ASSERT_EQ(std::vector<int>(pi.one_line().begin(), pi.one_line().end()), expected);
  }
}

TEST(Accessors, PositionsAndLetters) {
  const auto p = parse_pair(kSeven);
  EXPECT_EQ(p.first(Row::top), L(p, "a"));
  EXPECT_EQ(p.last(Row::bottom), L(p, "a"));
  EXPECT_EQ(p.position(Row::bottom, L(p, "e")), 2u);
  EXPECT_EQ(p.at(Row::bottom, 3), L(p, "b"));
}
