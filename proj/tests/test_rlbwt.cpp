#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rl2lz/rlbwt.hpp"
#include "rl2lz/textkit.hpp"
#include "support.hpp"

namespace rl2lz {
namespace {

using testing::byte_code;
using testing::Fixture;

class Mississippi : public ::testing::Test {
 protected:
  Fixture f = Fixture::of("mississippi");
  OccIndex idx{f.rlbwt};
  const Code s = byte_code('s');
  const Code i = byte_code('i');
  const Code p = byte_code('p');
  const Code m = byte_code('m');
};

TEST_F(Mississippi, Arrays) {
  EXPECT_EQ(std::vector<Index>(idx.code_run_starts(s).begin(), idx.code_run_starts(s).end()),
            (std::vector<Index>{3, 9}));
  EXPECT_EQ(std::vector<Index>(idx.code_run_ranks(s).begin(), idx.code_run_ranks(s).end()),
            (std::vector<Index>{1, 3, 5}));
  EXPECT_EQ(idx.count_less(kSentinel), 0u);
  EXPECT_EQ(idx.count_less(i), 1u);
  EXPECT_EQ(idx.count_less(m), 5u);
  EXPECT_EQ(idx.count_less(p), 6u);
  EXPECT_EQ(idx.count_less(s), 8u);
  EXPECT_EQ(idx.runs(), 9u);
  EXPECT_EQ(idx.run_starts()[0], 1u);
}

TEST_F(Mississippi, Access) {
  EXPECT_EQ(idx.access(6), kSentinel);
  EXPECT_EQ(idx.access(3), s);
  EXPECT_EQ(idx.access(1), i);
  EXPECT_THROW((void)idx.access(0), std::out_of_range);
  EXPECT_THROW((void)idx.access(13), std::out_of_range);
}

TEST_F(Mississippi, RankSelect) {
  EXPECT_EQ(idx.rank(s, 10), 4u);
  EXPECT_EQ(idx.rank(s, 2), 0u);
  EXPECT_EQ(idx.rank(byte_code('z'), 12), 0u);
  EXPECT_EQ(idx.select(s, 3), 9u);
  EXPECT_EQ(idx.select(i, 1), 1u);
  EXPECT_EQ(idx.select(byte_code('z'), 1), 13u);
  EXPECT_EQ(idx.select(s, 5), 13u);
}

TEST_F(Mississippi, Lf) {
  EXPECT_EQ(idx.lf(6), 1u);
  EXPECT_EQ(idx.lf(1), 2u);
  EXPECT_THROW((void)idx.lf(13), std::out_of_range);
}

TEST_F(Mississippi, BackwardSearch) {
  // [2,5] is the interval of "i".
  EXPECT_EQ(idx.backward_search({2, 5}, s), (Interval{9, 10}));
  EXPECT_EQ(idx.backward_search({1, 12}, p), (Interval{7, 8}));
  EXPECT_EQ(idx.backward_search({7, 8}, byte_code('z')), std::nullopt);
  EXPECT_EQ(idx.backward_search({7, 8}, m), std::nullopt);
}

TEST(OccIndex, UnaryText) {
  const auto f = Fixture::of("aaa");
  const OccIndex idx(f.rlbwt);
  EXPECT_EQ(std::vector<Index>(idx.run_starts().begin(), idx.run_starts().end()), (std::vector<Index>{1, 4}));
  EXPECT_EQ(std::vector<Code>(idx.run_heads().begin(), idx.run_heads().end()),
            (std::vector<Code>{byte_code('a'), kSentinel}));
  EXPECT_EQ(idx.lf(4), 1u);
}

TEST(OccIndex, AgreesWithNaiveScans) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Fixture f(testing::random_text(rng, rng() % 512, 1 + rng() % 12));
    const OccIndex idx(f.rlbwt);
    const auto& l = f.bwt.last;
    const Code max_code = *std::max_element(l.begin(), l.end());
    for (Index pos = 1; pos <= f.n(); ++pos) {
      ASSERT_EQ(idx.access(pos), l[pos - 1]);
      ASSERT_EQ(idx.lf(pos), f.lf_by_sa(pos));
    }
    for (Code c = 0; c <= max_code + 1; ++c) {
      for (Index pos = 0; pos <= f.n(); ++pos) {
        const Index rank = idx.rank(c, pos);
        ASSERT_EQ(rank, textkit::naive_rank(l, c, pos)) << "c=" << c << " i=" << pos;
        if (pos > 0 && rank > 0) {
          const Index back = idx.select(c, rank);
          ASSERT_LE(back, pos);
          ASSERT_EQ(back == pos, l[pos - 1] == c);
        }
      }
      for (Index j = 1; j <= f.n() + 1; ++j) {
        ASSERT_EQ(idx.select(c, j), textkit::naive_select(l, c, j)) << "c=" << c << " j=" << j;
      }
    }
  }
}

TEST(OccIndex, LfIsABijection) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const Fixture f(testing::random_text(rng, rng() % 300, 1 + rng() % 4));
    const OccIndex idx(f.rlbwt);
    std::set<Index> images;
    for (Index pos = 1; pos <= f.n(); ++pos) images.insert(idx.lf(pos));
    ASSERT_EQ(images.size(), f.n());

    std::vector<Code> reversed;
    std::set<Index> visited;
    Index row = f.rlbwt.y;
    for (Index step = 0; step < f.n(); ++step) {
      visited.insert(row);
      reversed.push_back(idx.access(row));
      row = idx.lf(row);
    }
    ASSERT_EQ(visited.size(), f.n());
    std::reverse(reversed.begin(), reversed.end());
    ASSERT_EQ(reversed, f.text.symbols);
  }
}

TEST(OccIndex, BackwardSearchAgreesWithSuffixScan) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned sigma = 1 + rng() % 4;
    const Fixture f(testing::random_text(rng, rng() % 256, sigma));
    const OccIndex idx(f.rlbwt);
    const auto& text = f.text.symbols;
    // Every substring T[a..b], grown leftwards from each end b.
    for (Index b = 1; b <= f.n(); ++b) {
      Interval range{1, f.n()};
      for (Index a = b; a >= 1; --a) {
        const auto next = idx.backward_search(range, text[a - 1]);
        const std::span<const Code> pattern(text.data() + a - 1, b - a + 1);
        ASSERT_EQ(next, textkit::naive_sa_interval(text, f.sa, pattern));
        range = *next;
      }
    }
    // Absent extensions.
    for (int q = 0; q < 200; ++q) {
      std::vector<Code> pattern(1 + rng() % 6);
      for (auto& c : pattern) c = 1 + static_cast<Code>(rng() % (sigma + 1));
      std::optional<Interval> range = Interval{1, f.n()};
      for (std::size_t k = pattern.size(); k-- > 0 && range;) {
        range = idx.backward_search(*range, pattern[k]);
        const std::span<const Code> suffix(pattern.data() + k, pattern.size() - k);
        ASSERT_EQ(range, textkit::naive_sa_interval(text, f.sa, suffix));
      }
    }
  }
}

TEST(Rlbwt, Validation) {
  Rlbwt good{{{1, 2}, {0, 1}}, 3, 3};
  EXPECT_NO_THROW(good.validate());
  EXPECT_THROW((Rlbwt{{{1, 2}, {0, 1}}, 4, 3}).validate(), MalformedInput);
  EXPECT_THROW((Rlbwt{{{1, 2}, {1, 1}}, 3, 3}).validate(), MalformedInput);
  EXPECT_THROW((Rlbwt{{{1, 2}, {0, 1}}, 3, 0}).validate(), MalformedInput);
  EXPECT_THROW((Rlbwt{{{1, 2}, {0, 1}}, 3, 4}).validate(), MalformedInput);
  EXPECT_THROW((Rlbwt{{{1, 0}, {0, 3}}, 3, 1}).validate(), MalformedInput);
  EXPECT_THROW((Rlbwt{{}, 0, 0}).validate(), MalformedInput);
  EXPECT_THROW(OccIndex(Rlbwt{{{1, 2}}, 3, 1}), MalformedInput);
}

TEST(ShrinkAlphabet, ByteCodes) {
  const auto f = Fixture::of("mississippi");
  Rlbwt original = f.rlbwt;
  for (auto& run : original.runs) run.code = run.code == kSentinel ? 36 : run.code - 1;
  const auto shrunk = shrink_alphabet(original);
  EXPECT_EQ(shrunk.inverse, (std::vector<Code>{36, 105, 109, 112, 115}));
  std::vector<Code> mapped;
  for (const auto& run : shrunk.rlbwt.runs) mapped.push_back(run.code);
  EXPECT_EQ(mapped, (std::vector<Code>{2, 4, 5, 3, 1, 4, 2, 5, 2}));
  EXPECT_EQ(shrunk.rlbwt.n, original.n);
  EXPECT_EQ(shrunk.rlbwt.y, original.y);
  EXPECT_EQ(shrunk.original(3), 109u);
}

TEST(ShrinkAlphabet, SparseAndDense) {
  const Rlbwt sparse{{{900, 1}, {7, 2}, {65, 1}, {7, 1}}, 5, 1};
  const auto shrunk = shrink_alphabet(sparse);
  EXPECT_EQ(shrunk.inverse, (std::vector<Code>{7, 65, 900}));
  EXPECT_EQ(shrunk.rlbwt.runs, (std::vector<rl2lz::Run>{{3, 1}, {1, 2}, {2, 1}, {1, 1}}));

  const Rlbwt dense{{{1, 1}, {2, 3}, {3, 1}}, 5, 2};
  const auto same = shrink_alphabet(dense);
  EXPECT_EQ(same.inverse, (std::vector<Code>{1, 2, 3}));
  EXPECT_EQ(same.rlbwt, dense);
}

TEST(ShrinkAlphabet, MatchesRlbwtOfShrunkText) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Code> palette(1 + rng() % 10);
    for (auto& c : palette) c = 1 + static_cast<Code>(rng() % 0xfffffffeu);
    std::vector<Code> codes(rng() % 512);
    for (auto& c : codes) c = palette[rng() % palette.size()];
    const auto text = textkit::text_from_codes(codes);

    std::vector<Code> distinct = text.symbols;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Code> shrunk_text;
    for (Code c : text.symbols) {
      shrunk_text.push_back(static_cast<Code>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin() + 1));
    }
    const auto shrunk = shrink_alphabet(textkit::build_rlbwt(text));
    ASSERT_EQ(shrunk.rlbwt, textkit::build_rlbwt(shrunk_text));
    ASSERT_EQ(shrunk.inverse, distinct);
  }
}

}  // namespace
}  // namespace rl2lz
