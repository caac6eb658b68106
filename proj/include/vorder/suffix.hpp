// Lex-extension order, suffix arrays, and the V-order Burrows-Wheeler
// transform built incrementally over the V-word factorization.
#ifndef VORDER_SUFFIX_HPP
#define VORDER_SUFFIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "vorder/core.hpp"
#include "vorder/factor.hpp"

namespace vorder {

/// Largest letter first, then the V-form block sequences compared block by
/// block in V-order; a block sequence that is a proper prefix of the other
/// is smaller. Throws EmptyString.
Order lexext_compare(WordView x, WordView y);

/// Strict minimum of its rotations under lexext_compare.
bool is_hybrid_lyndon(WordView w);

enum class SuffixOrder { VOrder, LexExt };

struct SuffixArray {
    std::vector<std::size_t> order;  // 1-based start positions, ascending
    SuffixOrder comparison = SuffixOrder::LexExt;
    std::size_t first = 1;  // 1-based inclusive range of starts covered
    std::size_t last = 0;
};

/// Always [n, n-1, ..., 1]: every suffix is a subsequence of the longer ones.
SuffixArray suffix_array_vorder(WordView x);
SuffixArray suffix_array_lexext(WordView x);

/// How suffixes starting inside a segment x[first..last] are ranked.
enum class SegmentContext {
    FullSuffix,   // by x[i..n]
    FactorLocal,  // by x[i..last], the suffixes of the segment itself
};

SuffixArray segment_suffix_array(WordView x, std::size_t first, std::size_t last,
                                 SegmentContext context = SegmentContext::FullSuffix);

struct BwtResult {
    Word transformed;
    std::size_t primary_index = 0;  // 1-based rank of the suffix starting at 1
};

/// transformed[r] = x[h - 1] for h = sa.order[r], with x[0] read as x[n].
BwtResult bwt_from_sa(WordView x, const SuffixArray& sa);

struct MergeStats {
    std::size_t comparisons = 0;
    std::size_t fast_path = 0;  // decided by suffix maxima alone
};

/// Merges the arrays of two adjacent segments, keeping each side's relative
/// order. Cross comparisons use the full suffixes of x.
SuffixArray merge_sorted_suffixes(const SuffixArray& left, const SuffixArray& right, WordView x,
                                  MergeStats* stats = nullptr);

struct IncrementalOptions {
    SegmentContext context = SegmentContext::FullSuffix;
};

/// Reported after each factor has been folded into the running array.
struct IncrementalStep {
    std::size_t factor_index = 0;  // 1-based
    std::size_t factor_first = 0;
    std::size_t factor_last = 0;
    const SuffixArray* running = nullptr;  // covers starts 1..factor_last
    Word bwt;                              // BWT letters of the running array
    MergeStats merge;
};

using ProgressSink = std::function<void(const IncrementalStep&)>;

/// Factorizes x on-line; each factor is sorted as it is identified, merged
/// into the running array, and reported through `progress`.
BwtResult bwt_incremental(WordView x, IncrementalOptions options = {}, const ProgressSink& progress = {});

struct Incompatibility {
    std::size_t p = 0;  // 1-based starts, p < q
    std::size_t q = 0;
    Order within_segment = Order::EQ;
    Order within_word = Order::EQ;
};

/// Suffixes of u = x_i ... x_j (factors of factorize(x), 1-based) must keep
/// their relative order when extended to the suffixes of x. Returns the
/// first pair of starts where they do not. Throws Error on bad indices.
std::optional<Incompatibility> find_incompatibility(WordView x, const Factorization& f, std::size_t i,
                                                    std::size_t j, SuffixOrder order = SuffixOrder::LexExt);

bool compatibility_check(WordView x, std::size_t i, std::size_t j, SuffixOrder order = SuffixOrder::LexExt);

}  // namespace vorder

#endif  // VORDER_SUFFIX_HPP
