#include <gtest/gtest.h>

#include <set>
#include <string>

#include "hump/path_core.hpp"
#include "hump/series.hpp"
#include "oracle.hpp"

using namespace hump;
using namespace hump::literals;

TEST(ParsePath, TransliteratesLetters) {
  const auto w = parse_path("UFD");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Step::up);
  EXPECT_EQ(w[1], Step::flat);
  EXPECT_EQ(w[2], Step::down);
  EXPECT_TRUE(parse_path("").empty());
}

TEST(ParsePath, RejectsOtherCharactersWithPosition) {
  try {
    parse_path("UXD");
    FAIL() << "expected invalid_character";
  } catch (const invalid_character& e) {
    EXPECT_EQ(e.code(), errc::invalid_character);
    EXPECT_EQ(e.position(), 1u);
  }
  EXPECT_THROW(parse_path("ud"), invalid_character);
}

TEST(ParsePath, PrintParseIsIdentityOnAllShortWords) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : oracle::all_words(n)) EXPECT_EQ(parse_path(s).str(), s);
}

TEST(HeightProfile, StartsAtZeroAndFollowsIncrements) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& s : oracle::all_words(n)) {
      const auto h = parse_path(s).height_profile();
      ASSERT_EQ(h.size(), s.size() + 1);
      EXPECT_EQ(h, oracle::heights(s));
    }
}

TEST(Classify, FigureWords) {
  const auto left = classify("UFUFFDDUD"_path);
  EXPECT_TRUE(left.motzkin_path());
  EXPECT_EQ(left.end_height, 0);
  EXPECT_EQ(left.min_height, 0);

  const auto right = classify("UFUUDUUFF"_path);
  EXPECT_TRUE(right.motzkin_prefix());
  EXPECT_FALSE(right.motzkin_path());
  EXPECT_EQ(right.end_height, 4);
  EXPECT_TRUE(right.star_u());
}

TEST(Classify, StarFlagsFalseWithoutRelevantSteps) {
  const auto flat = classify("FFF"_path);
  EXPECT_FALSE(flat.star_u());
  EXPECT_FALSE(flat.d_star());
  EXPECT_EQ(flat.end_height, 0);
  // U^n has no non-up step, so it is not in D*.
  EXPECT_FALSE(classify("UUU"_path).d_star());
  EXPECT_TRUE(classify("UUU"_path).star_u());
}

TEST(Classify, FlagRelationsHoldExhaustively) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& s : oracle::all_words(n)) {
      const auto c = classify(parse_path(s));
      EXPECT_EQ(c.motzkin_path(), c.motzkin_prefix() && c.end_height == 0) << s;
      EXPECT_EQ(c.dyck_prefix(), c.motzkin_prefix() && s.find('F') == std::string::npos) << s;
      EXPECT_EQ(c.free_motzkin(), c.end_height == 0) << s;
      EXPECT_EQ(c.motzkin_prefix(), oracle::is_prefix(s)) << s;
      EXPECT_EQ(c.star_u(), oracle::last_non_flat_is_up(s)) << s;
      const auto first_non_up = s.find_first_not_of('U');
      EXPECT_EQ(c.d_star(), first_non_up != std::string::npos && s[first_non_up] == 'D') << s;
    }
}

TEST(ReverseComplement, Examples) {
  EXPECT_EQ(reverse_complement("DUD"_path).str(), "UDU");
  EXPECT_EQ(reverse_complement("F"_path).str(), "F");
  EXPECT_EQ(reverse_complement("UUD"_path).str(), "UDD");
}

TEST(ReverseComplement, IsAnInvolutionUpToTwelve) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& s : oracle::all_words(n)) {
      const auto w = parse_path(s);
      ASSERT_EQ(reverse_complement(reverse_complement(w)), w) << s;
    }
}

TEST(EnumeratePaths, MotzkinOrderThree) {
  std::vector<std::string> got;
  for (const auto& w : collect_paths(3, PathFilter::of(PathFlag::motzkin_path))) got.push_back(w.str());
  EXPECT_EQ(got, (std::vector<std::string>{"UDF", "UFD", "FUD", "FFF"}));
  // U < D < F ordering; same set as {FFF, FUD, UDF, UFD}
}

TEST(EnumeratePaths, EmptyAndFree) {
  const auto empty = collect_paths(0, PathFilter::of(PathFlag::motzkin_path));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());

  std::vector<std::string> got;
  for (const auto& w : collect_paths(2, PathFilter::of(PathFlag::free_motzkin))) got.push_back(w.str());
  EXPECT_EQ(got, (std::vector<std::string>{"UD", "DU", "FF"}));
}

TEST(EnumeratePaths, YieldsFilteredWordsInLexOrder) {
  // Against the oracle's full word list for several filters.
  const std::vector<PathFilter> filters = {
      PathFilter::all(),
      PathFilter::of(PathFlag::motzkin_prefix),
      PathFilter::of(PathFlag::dyck_prefix),
      PathFilter::of(PathFlag::free_motzkin | PathFlag::star_u).with_min(-2),
      PathFilter::of(PathFlag::motzkin_prefix | PathFlag::d_star).ending_at(1),
  };
  for (int n = 0; n <= 7; ++n)
    for (const auto& f : filters) {
      std::vector<std::string> expected;
      for (const auto& s : oracle::all_words(n))
        if (f.matches(classify(parse_path(s)))) expected.push_back(s);
      std::vector<std::string> got;
      enumerate_paths(n, f, [&](const PathWord& w) { got.push_back(w.str()); });
      EXPECT_EQ(got, expected) << "n=" << n;
    }
}

TEST(EnumeratePaths, SizeLimit) {
  EXPECT_NO_THROW(count_paths(16, PathFilter::of(PathFlag::motzkin_path)));
  try {
    count_paths(17, PathFilter::all());
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::size_limit);
  }
  EXPECT_THROW(count_paths(5, PathFilter::all(), 4), error);
}

TEST(MpCount, Examples) {
  EXPECT_EQ(mp_count(3, 1), 5);
  EXPECT_EQ(mp_count(0, 0), 1);
  EXPECT_EQ(mp_count(2, 0), 2);
  EXPECT_EQ(mp_count(3, 7), 0);
  EXPECT_EQ(oracle::mp(3, 1), 5);
  EXPECT_EQ(oracle::mp(2, 0), 2);
}

TEST(MpCount, NegativeIndex) {
  for (auto [n, k] : {std::pair{-1, 0}, std::pair{0, -1}}) {
    try {
      mp_count(n, k);
      FAIL();
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::negative_index);
    }
  }
}

TEST(MpCount, MatchesEnumerationUpToTwelve) {
  for (int n = 0; n <= 12; ++n) {
    std::vector<ExactInt> tally(static_cast<std::size_t>(n) + 1, 0);
    ExactInt dipping = 0;
    enumerate_paths(n, PathFilter::all(), [&](const PathWord& w) {
      const auto c = classify(w);
      if (c.motzkin_prefix()) ++tally[static_cast<std::size_t>(c.end_height)];
      else ++dipping;
    });
    ExactInt total = 0;
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(mp_count(n, k), tally[static_cast<std::size_t>(k)]) << n << "," << k;
      total += mp_count(n, k);
    }
    ExactInt all = 1;
    for (int i = 0; i < n; ++i) all *= 3;
    EXPECT_EQ(total, all - dipping);
  }
}

TEST(MpCount, FirstColumnIsMotzkinNumbers) {
  const auto m = motzkin_series(20);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(mp_count(n, 0), m[n]) << n;
}
