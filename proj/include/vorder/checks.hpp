// Property suite shared by `vorder check` and the acceptance binary. Every
// check returns a Result carrying case and failure counts plus the first
// counterexample found.
#ifndef VORDER_CHECKS_HPP
#define VORDER_CHECKS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vorder/core.hpp"
#include "vorder/suffix.hpp"

namespace vorder::checks {

struct Result {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool passed() const noexcept { return failures == 0; }
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive
    Letter letter(Letter lo, Letter hi) { return static_cast<Letter>(uniform(lo, hi)); }
    /// Letters drawn from 1..sigma.
    Word word(std::size_t min_len, std::size_t max_len, Letter sigma);
    /// A few random substitutions, insertions and deletions applied to w,
    /// so that pairs share long stretches and reach the block recursion.
    Word mutate(const Word& w, Letter sigma);

private:
    std::mt19937_64 engine_;
};

/// Every word over 1..sigma with length in [min_len, max_len], shortest
/// first and in lexicographic order within a length.
std::vector<Word> all_words(Letter sigma, std::size_t max_len, std::size_t min_len = 1);

/// Compact text for diagnostics: "2442", or "10 3 12" once letters exceed 9.
std::string show(WordView w);

Word concat(WordView a, WordView b);

Result golden_examples();

Result comparator_agreement_exhaustive(Letter sigma, std::size_t max_len);
Result comparator_agreement_random(std::size_t pairs, Letter max_sigma, std::size_t max_n, std::uint64_t seed);
Result subsequence_property(std::size_t count, std::uint64_t seed);

Result append_prepend(std::size_t count, std::uint64_t seed);
Result context_invariance(std::size_t count, std::uint64_t seed);
/// Single letter insertion at the same block index, letter at most the
/// larger of the two maximal letters.
Result insertion_invariance(std::size_t count, std::uint64_t seed);
/// The same with an inserted string whose letters obey the same bound.
Result insertion_string_invariance(std::size_t count, std::uint64_t seed);
/// Letters above both maxima may break insertion invariance; the known
/// counterexample 1323 / 3133 with 4 must do so.
Result insertion_counterexample();
Result monotone_extension(std::size_t count, std::uint64_t seed);
Result monotone_non_converse();
Result chain_property(std::size_t count, std::uint64_t seed);
Result stream_consistency(std::size_t count, std::uint64_t seed);

Result total_order_axioms(Letter sigma, std::size_t max_len);

Result factorization_exhaustive(Letter sigma, std::size_t max_len);

Result suffix_vorder_claim(std::size_t count, std::size_t max_n, std::uint64_t seed);
Result lexext_total_order(Letter sigma, std::size_t max_len);

Result pipeline_equivalence(std::size_t count, Letter max_sigma, std::size_t max_n, std::uint64_t seed,
                            SegmentContext context = SegmentContext::FullSuffix);
Result merge_equivalence(std::size_t count, std::size_t max_n, std::uint64_t seed);

Result compatibility_exhaustive(Letter sigma, std::size_t max_len, SuffixOrder order = SuffixOrder::LexExt);

struct SensitivityRow {
    std::size_t n = 0;
    std::size_t mismatch = 0;  // 1-based first mismatch position
    std::size_t window = 0;    // letters from the mismatch to the next maximal letter
    std::size_t sensitive_letters = 0;
    std::size_t vform_letters = 0;
};

/// Pairs of length n differing first at position p, the nearest maximal
/// letter sitting `window` letters after p.
SensitivityRow input_sensitivity_case(std::size_t n, std::size_t p, std::size_t window, Letter sigma,
                                      std::uint64_t seed);

struct ScalingRow {
    std::size_t k = 0;
    std::size_t n = 0;
    double seconds = 0.0;  // best of the repeats
    std::size_t merge_comparisons = 0;
};

/// A word of length n (n >= k) whose factorization has exactly k factors:
/// each factor is 2 followed by ones, lengths nonincreasing, so the
/// suffixes of different factors interleave when merged.
Word word_with_k_factors(std::size_t n, std::size_t k);
ScalingRow incremental_scaling_case(std::size_t n, std::size_t k, std::size_t repeats);

}  // namespace vorder::checks

#endif  // VORDER_CHECKS_HPP
