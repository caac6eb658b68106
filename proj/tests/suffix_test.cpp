#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "vorder/checks.hpp"
#include "vorder/compare.hpp"
#include "vorder/suffix.hpp"

using namespace vorder;
using checks::show;

namespace {

Word digits(std::string_view s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Letter>(c - '0'));
    return w;
}

// Reference lex-extension built from the V-form blocks and the star-tree
// comparison, independent of the library implementation.
Order lexext_oracle(WordView x, WordView y) {
    const VForm a = vform(x);
    const VForm b = vform(y);
    if (a.max_letter != b.max_letter) return order_of(a.max_letter, b.max_letter);
    const std::size_t m = std::min(a.blocks.size(), b.blocks.size());
    for (std::size_t i = 0; i < m; ++i) {
        const Order o = compare_star_oracle(a.blocks[i], b.blocks[i]);
        if (o != Order::EQ) return o;
    }
    return order_of(a.blocks.size(), b.blocks.size());
}

std::vector<std::size_t> brute_force_sa(WordView x) {
    std::vector<std::size_t> sa(x.size());
    std::iota(sa.begin(), sa.end(), std::size_t{1});
    std::ranges::stable_sort(sa, [&](std::size_t p, std::size_t q) {
        return lexext_oracle(x.subspan(p - 1), x.subspan(q - 1)) == Order::LT;
    });
    return sa;
}

}  // namespace

TEST(LexExt, Examples) {
    EXPECT_EQ(lexext_compare(digits("21"), digits("12")), Order::LT);
    EXPECT_EQ(lexext_compare(digits("3"), digits("222")), Order::GT);
    EXPECT_EQ(lexext_compare(digits("33"), digits("33")), Order::EQ);
    EXPECT_EQ(lexext_compare(digits("3"), digits("31")), Order::LT);  // second blocks: empty before 1
    EXPECT_THROW(lexext_compare(Word{}, digits("1")), EmptyString);
}

TEST(LexExt, RotationsOf1323) {
    std::vector<Word> rot = {digits("1323"), digits("3231"), digits("2313"), digits("3132")};
    std::ranges::sort(rot, [](const Word& a, const Word& b) { return lexext_compare(a, b) == Order::LT; });
    EXPECT_EQ(rot, (std::vector<Word>{digits("3132"), digits("3231"), digits("1323"), digits("2313")}));
}

TEST(LexExt, MatchesOracleExhaustively) {
    const auto words = checks::all_words(3, 5);
    for (const auto& x : words)
        for (const auto& y : words) ASSERT_EQ(lexext_compare(x, y), lexext_oracle(x, y)) << show(x) << " " << show(y);
}

TEST(LexExt, TotalOrder) {
    const auto r = checks::lexext_total_order(2, 6);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(SuffixArrayTest, VOrderIsByLength) {
    EXPECT_EQ(suffix_array_vorder(digits("213312")).order, (std::vector<std::size_t>{6, 5, 4, 3, 2, 1}));
    EXPECT_EQ(suffix_array_vorder(digits("5")).order, (std::vector<std::size_t>{1}));
    const auto r = checks::suffix_vorder_claim(200, 40, 3);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(SuffixArrayTest, LexExtMatchesBruteForce) {
    checks::Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        const Word x = rng.word(1, 50, rng.letter(1, 5));
        const SuffixArray sa = suffix_array_lexext(x);
        EXPECT_EQ(sa.order, brute_force_sa(x)) << show(x);
        EXPECT_EQ(sa.first, 1u);
        EXPECT_EQ(sa.last, x.size());
    }
}

TEST(SuffixArrayTest, PowersOfOneLetter) {
    // g^k: every block sequence is empty blocks, shorter ones are prefixes
    EXPECT_EQ(suffix_array_lexext(Word(5, 3)).order, (std::vector<std::size_t>{5, 4, 3, 2, 1}));
}

TEST(SuffixArrayTest, SegmentRangeErrors) {
    const Word x = digits("2132");
    EXPECT_THROW(segment_suffix_array(x, 0, 2), Error);
    EXPECT_THROW(segment_suffix_array(x, 3, 2), Error);
    EXPECT_THROW(segment_suffix_array(x, 1, 5), Error);
    EXPECT_THROW(suffix_array_lexext(Word{}), EmptyString);
}

TEST(Bwt, Golden2132) {
    const Word x = digits("2132");
    const SuffixArray sa = suffix_array_lexext(x);
    EXPECT_EQ(sa.order, (std::vector<std::size_t>{4, 3, 2, 1}));
    const BwtResult b = bwt_from_sa(x, sa);
    EXPECT_EQ(b.transformed, digits("3122"));
    EXPECT_EQ(b.primary_index, 4u);
    const BwtResult inc = bwt_incremental(x);
    EXPECT_EQ(inc.transformed, b.transformed);
    EXPECT_EQ(inc.primary_index, b.primary_index);
}

TEST(Bwt, SingleLetter) {
    const BwtResult b = bwt_incremental(digits("7"));
    EXPECT_EQ(b.transformed, digits("7"));
    EXPECT_EQ(b.primary_index, 1u);
}

TEST(Bwt, RejectsPartialArrays) {
    const Word x = digits("2132");
    EXPECT_THROW(bwt_from_sa(x, segment_suffix_array(x, 1, 2)), Error);
    EXPECT_THROW(bwt_incremental(Word{}), EmptyString);
}

TEST(Merge, Examples) {
    const Word x = digits("2132");
    MergeStats st;
    const SuffixArray m = merge_sorted_suffixes(segment_suffix_array(x, 1, 2), segment_suffix_array(x, 3, 4), x, &st);
    EXPECT_EQ(m.order, suffix_array_lexext(x).order);
    EXPECT_EQ(m.first, 1u);
    EXPECT_EQ(m.last, 4u);
    EXPECT_GE(st.comparisons, 1u);
    EXPECT_THROW(merge_sorted_suffixes(segment_suffix_array(x, 1, 1), segment_suffix_array(x, 3, 4), x), Error);
}

TEST(Merge, FastPathOnLargerLeftMaximum) {
    // the suffix at 1 holds the only 3
    const Word x = digits("3121");
    MergeStats st;
    const SuffixArray m = merge_sorted_suffixes(segment_suffix_array(x, 1, 1), segment_suffix_array(x, 2, 4), x, &st);
    EXPECT_EQ(m.order, suffix_array_lexext(x).order);
    EXPECT_EQ(st.fast_path, st.comparisons);
}

TEST(Merge, RandomSplits) {
    const auto r = checks::merge_equivalence(300, 40, 5);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Incremental, SingleVWordIsOneStep) {
    const Word x = digits("3121");
    ASSERT_EQ(factorize(x).factors.size(), 1u);
    std::size_t steps = 0;
    const BwtResult b = bwt_incremental(x, {}, [&](const IncrementalStep& s) {
        ++steps;
        EXPECT_EQ(s.factor_first, 1u);
        EXPECT_EQ(s.factor_last, 4u);
        EXPECT_EQ(s.merge.comparisons, 0u);
    });
    EXPECT_EQ(steps, 1u);
    EXPECT_EQ(b.transformed, bwt_from_sa(x, suffix_array_lexext(x)).transformed);
}

TEST(Incremental, ProgressCoversPrefixes) {
    const Word x = digits("2113121412");
    const Factorization f = factorize(x);
    std::vector<std::size_t> lasts;
    bwt_incremental(x, {}, [&](const IncrementalStep& s) {
        lasts.push_back(s.factor_last);
        ASSERT_NE(s.running, nullptr);
        EXPECT_EQ(s.running->first, 1u);
        EXPECT_EQ(s.running->last, s.factor_last);
        EXPECT_EQ(s.running->order.size(), s.factor_last);
        EXPECT_EQ(s.bwt.size(), s.factor_last);
        EXPECT_EQ(s.factor_index, lasts.size());
    });
    EXPECT_EQ(lasts, f.ends);
}

TEST(Incremental, MatchesDirect) {
    const auto r = checks::pipeline_equivalence(200, 4, 60, 11);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Incremental, FactorLocalSegmentsCanDisagree) {
    // inside [21] the suffix 1 precedes 21, but 12 follows 212 in the word
    const Word x = digits("212");
    const BwtResult direct = bwt_from_sa(x, suffix_array_lexext(x));
    const BwtResult local = bwt_incremental(x, {SegmentContext::FactorLocal});
    EXPECT_FALSE(local.transformed == direct.transformed && local.primary_index == direct.primary_index);
    const BwtResult full = bwt_incremental(x);
    EXPECT_EQ(full.transformed, direct.transformed);
    EXPECT_EQ(full.primary_index, direct.primary_index);
}

TEST(Compatibility, WholeWordIsCompatible) {
    checks::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const Word x = rng.word(1, 20, 3);
        EXPECT_TRUE(compatibility_check(x, 1, factorize(x).factors.size())) << show(x);
    }
}

TEST(Compatibility, HoldsUnderVOrder) {
    const auto r = checks::compatibility_exhaustive(2, 8, SuffixOrder::VOrder);
    EXPECT_TRUE(r.passed()) << r.first_failure;
}

TEST(Compatibility, LexExtCounterexample212) {
    const Word x = digits("212");
    const Factorization f = factorize(x);
    ASSERT_EQ(f.factors, (std::vector<Word>{digits("21"), digits("2")}));
    const auto bad = find_incompatibility(x, f, 1, 1);
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->p, 1u);
    EXPECT_EQ(bad->q, 2u);
    EXPECT_EQ(bad->within_segment, Order::GT);
    EXPECT_EQ(bad->within_word, Order::LT);
    EXPECT_THROW(find_incompatibility(x, f, 1, 3), Error);
    EXPECT_THROW(find_incompatibility(x, f, 0, 1), Error);
}
