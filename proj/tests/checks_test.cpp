#include <gtest/gtest.h>

#include "vorder/checks.hpp"

using namespace vorder;
using namespace vorder::checks;

TEST(Utilities, AllWords) {
    EXPECT_EQ(all_words(3, 5).size(), 363u);
    EXPECT_EQ(all_words(3, 5, 0).size(), 364u);
    const auto w = all_words(2, 2);
    EXPECT_EQ(w, (std::vector<Word>{{1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST(Utilities, RngIsDeterministic) {
    Rng a(7), b(7);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(a.word(0, 30, 5), b.word(0, 30, 5));
    Rng c(3);
    for (int i = 0; i < 200; ++i) {
        const Word w = c.word(2, 9, 4);
        EXPECT_GE(w.size(), 2u);
        EXPECT_LE(w.size(), 9u);
        for (Letter l : w) {
            EXPECT_GE(l, 1u);
            EXPECT_LE(l, 4u);
        }
    }
}

TEST(Utilities, Show) {
    EXPECT_EQ(show(Word{2, 4, 4, 2}), "2442");
    EXPECT_EQ(show(Word{10, 3, 12}), "10 3 12");
    EXPECT_EQ(show(Word{}), "ε");
}

TEST(Suite, GoldensPass) {
    const auto r = golden_examples();
    EXPECT_TRUE(r.passed()) << r.first_failure;
    EXPECT_GE(r.cases, 16u);
}

TEST(Suite, SmallPropertyChecksPass) {
    for (const Result& r : {comparator_agreement_exhaustive(3, 4), comparator_agreement_random(300, 6, 40, 1),
                            subsequence_property(300, 2), append_prepend(300, 3), context_invariance(300, 4),
                            insertion_invariance(300, 5), insertion_string_invariance(300, 6),
                            insertion_counterexample(), monotone_extension(300, 7), monotone_non_converse(),
                            chain_property(300, 8), total_order_axioms(2, 4)}) {
        EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
        EXPECT_GT(r.cases, 0u) << r.name;
    }
}

TEST(Suite, CompatibilityCheckReportsCounterexample) {
    const auto r = compatibility_exhaustive(2, 3);
    EXPECT_FALSE(r.passed());
    EXPECT_NE(r.first_failure.find("212"), std::string::npos) << r.first_failure;
}

TEST(Suite, SensitivityRowIsLocal) {
    const auto a = input_sensitivity_case(2000, 100, 5, 4, 1);
    const auto b = input_sensitivity_case(8000, 100, 5, 4, 1);
    EXPECT_EQ(a.mismatch, 100u);
    EXPECT_EQ(a.sensitive_letters, b.sensitive_letters);
    EXPECT_LT(a.sensitive_letters, 64u);
}
