#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "rauzy/rauzy.hpp"

using namespace rauzy;

TEST(Invariance, SigmaAndStructureUnderRightInduction) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& p : oracle::all_irreducible(n)) {
      const auto s = sigma(p);
      const auto ms = marked_structure(p);
      for (const auto m : kRightMoves) {
        const auto q = induce(p, m);
        ASSERT_EQ(sigma(q), s) << format_pair(p) << " " << to_string(m);
        ASSERT_EQ(marked_structure(q), ms) << format_pair(p) << " " << to_string(m);
      }
    }
  }
}

TEST(Invariance, ProfileUnderAllMoves) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& p : oracle::all_irreducible(n)) {
      const auto pr = profile(p);
      for (const auto m : kAllMoves) ASSERT_EQ(profile(induce(p, m)), pr) << format_pair(p) << " " << to_string(m);
    }
  }
}

TEST(Invariance, SpinOverExtendedClasses) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::map<std::vector<Letter>, SpinParity> by_member;
    for (const auto& p : oracle::all_irreducible_sorted_top(n)) {
      const auto s = spin(p);
      ASSERT_NE(s, SpinParity::not_computed) << format_pair(p);
      for (const auto& pi : nonlabeled_class(p, Flavor::extended)) {
        const std::vector<Letter> key(pi.one_line().begin(), pi.one_line().end());
        const auto [it, fresh] = by_member.emplace(key, s);
        ASSERT_EQ(it->second, s) << format_pair(p);
      }
    }
  }
}

TEST(Invariance, RenamingGroupAcrossClassMembers) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& p : oracle::all_irreducible_sorted_top(n)) {
      const auto g = renaming_group(p).elements;
      for (const auto m : kAllMoves) ASSERT_EQ(renaming_group(induce(p, m)).elements, g) << format_pair(p);
    }
  }
}

TEST(RenamingGroup, ClassificationFollowsTheProfile) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& p : oracle::all_irreducible_sorted_top(n)) {
      const auto g = renaming_group(p);
      const auto expected = profile(p).simple() ? GroupKind::alternating : GroupKind::symmetric;
      ASSERT_EQ(g.classification.kind, expected) << format_pair(p);
      ASSERT_EQ(g.elements, renaming_group_bruteforce(p).elements) << format_pair(p);
    }
  }
}

TEST(Centralizer, EvenWhenProfileIsSimple) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& p : oracle::all_irreducible_sorted_top(n)) {
      if (!profile(p).simple()) continue;
      for (const auto& z : centralizer(marked_structure(p)).elements) ASSERT_TRUE(is_even(z)) << format_pair(p);
    }
  }
}
