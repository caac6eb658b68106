#include <algorithm>
#include <numeric>

#include "vorder/compare.hpp"
#include "vorder/suffix.hpp"

namespace vorder {

namespace {

std::size_t block_end(WordView w, std::size_t from, Letter g) noexcept {
    while (from < w.size() && w[from] != g) ++from;
    return from;
}

Order compare_under(SuffixOrder order, WordView x, WordView y) {
    return order == SuffixOrder::VOrder ? compare_vform(x, y) : lexext_compare(x, y);
}

WordView suffix(WordView x, std::size_t start) { return x.subspan(start - 1); }

WordView segment_suffix(WordView x, std::size_t start, std::size_t last) {
    return x.subspan(start - 1, last - start + 1);
}

}  // namespace

Order lexext_compare(WordView x, WordView y) {
    if (x.empty() || y.empty()) throw EmptyString("lexext_compare");
    const MaxCount mx = max_count(x);
    const MaxCount my = max_count(y);
    if (mx.max_letter != my.max_letter) return order_of(mx.max_letter, my.max_letter);

    const Letter g = mx.max_letter;
    std::size_t i = 0, j = 0;
    for (;;) {
        const std::size_t ei = block_end(x, i, g);
        const std::size_t ej = block_end(y, j, g);
        WordView bx = x.subspan(i, ei - i);
        WordView by = y.subspan(j, ej - j);
        if (!std::ranges::equal(bx, by)) return compare_vform(bx, by);
        const bool x_done = ei == x.size();
        const bool y_done = ej == y.size();
        if (x_done || y_done) return order_of(!x_done, !y_done);
        i = ei + 1;
        j = ej + 1;
    }
}

bool is_hybrid_lyndon(WordView w) {
    if (w.empty()) throw EmptyString("is_hybrid_lyndon");
    Word rotation(w.size());
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::ranges::rotate_copy(w, w.begin() + static_cast<std::ptrdiff_t>(r), rotation.begin());
        if (lexext_compare(w, rotation) != Order::LT) return false;
    }
    return true;
}

SuffixArray suffix_array_vorder(WordView x) {
    if (x.empty()) throw EmptyString("suffix_array_vorder");
    SuffixArray sa;
    sa.comparison = SuffixOrder::VOrder;
    sa.first = 1;
    sa.last = x.size();
    sa.order.resize(x.size());
    std::iota(sa.order.rbegin(), sa.order.rend(), std::size_t{1});
    return sa;
}

SuffixArray suffix_array_lexext(WordView x) {
    if (x.empty()) throw EmptyString("suffix_array_lexext");
    return segment_suffix_array(x, 1, x.size(), SegmentContext::FullSuffix);
}

SuffixArray segment_suffix_array(WordView x, std::size_t first, std::size_t last, SegmentContext context) {
    if (x.empty()) throw EmptyString("segment_suffix_array");
    if (first < 1 || first > last || last > x.size()) throw Error("segment_suffix_array: segment out of range");
    SuffixArray sa;
    sa.first = first;
    sa.last = last;
    sa.order.resize(last - first + 1);
    std::iota(sa.order.begin(), sa.order.end(), first);
    const std::size_t end = context == SegmentContext::FullSuffix ? x.size() : last;
    std::ranges::sort(sa.order, [&](std::size_t a, std::size_t b) {
        return lexext_compare(segment_suffix(x, a, end), segment_suffix(x, b, end)) == Order::LT;
    });
    return sa;
}

BwtResult bwt_from_sa(WordView x, const SuffixArray& sa) {
    if (x.empty()) throw EmptyString("bwt_from_sa");
    if (sa.order.size() != x.size() || sa.first != 1 || sa.last != x.size())
        throw Error("bwt_from_sa: suffix array does not cover the word");
    BwtResult r;
    r.transformed.reserve(x.size());
    for (std::size_t rank = 0; rank < sa.order.size(); ++rank) {
        const std::size_t h = sa.order[rank];
        if (h < 1 || h > x.size()) throw Error("bwt_from_sa: start position out of range");
        r.transformed.push_back(h == 1 ? x.back() : x[h - 2]);
        if (h == 1) r.primary_index = rank + 1;
    }
    return r;
}

SuffixArray merge_sorted_suffixes(const SuffixArray& left, const SuffixArray& right, WordView x,
                                  MergeStats* stats) {
    if (left.last + 1 != right.first || right.last > x.size() || left.comparison != right.comparison)
        throw Error("merge_sorted_suffixes: segments are not adjacent in the same order");

    // Maximum of x[i..n], 1-based; a cross comparison always pits a suffix
    // against one of its own proper suffixes, so a strictly larger maximum
    // on the left settles it under the largest-letter-first rule.
    std::vector<Letter> suffix_max(x.size() + 2, 0);
    for (std::size_t i = x.size(); i >= 1; --i) suffix_max[i] = std::max(x[i - 1], suffix_max[i + 1]);

    MergeStats local;
    MergeStats& st = stats ? *stats : local;
    SuffixArray out;
    out.comparison = left.comparison;
    out.first = left.first;
    out.last = right.last;
    out.order.reserve(left.order.size() + right.order.size());

    auto l = left.order.begin();
    auto r = right.order.begin();
    while (l != left.order.end() && r != right.order.end()) {
        ++st.comparisons;
        bool take_left;
        if (left.comparison == SuffixOrder::LexExt && suffix_max[*l] > suffix_max[*r]) {
            ++st.fast_path;
            take_left = false;
        } else {
            take_left = compare_under(left.comparison, suffix(x, *l), suffix(x, *r)) == Order::LT;
        }
        out.order.push_back(take_left ? *l++ : *r++);
    }
    out.order.insert(out.order.end(), l, left.order.end());
    out.order.insert(out.order.end(), r, right.order.end());
    return out;
}

BwtResult bwt_incremental(WordView x, IncrementalOptions options, const ProgressSink& progress) {
    if (x.empty()) throw EmptyString("bwt_incremental");
    std::optional<SuffixArray> running;
    std::size_t index = 0;

    OnlineFactorizer factorizer([&](WordView factor, std::size_t end) {
        const std::size_t first = end - factor.size() + 1;
        SuffixArray segment = segment_suffix_array(x, first, end, options.context);
        IncrementalStep step;
        step.factor_index = ++index;
        step.factor_first = first;
        step.factor_last = end;
        if (running) {
            running = merge_sorted_suffixes(*running, segment, x, &step.merge);
        } else {
            running = std::move(segment);
        }
        if (progress) {
            step.running = &*running;
            step.bwt.reserve(running->order.size());
            for (std::size_t h : running->order) step.bwt.push_back(h == 1 ? x.back() : x[h - 2]);
            progress(step);
        }
    });
    for (Letter c : x) factorizer.push(c);
    factorizer.finish();
    return bwt_from_sa(x, *running);
}

std::optional<Incompatibility> find_incompatibility(WordView x, const Factorization& f, std::size_t i,
                                                    std::size_t j, SuffixOrder order) {
    if (i < 1 || i > j || j > f.factors.size()) throw Error("compatibility_check: factor range out of bounds");
    const std::size_t a = f.ends[i - 1] - f.factors[i - 1].size() + 1;
    const std::size_t b = f.ends[j - 1];
    for (std::size_t p = a; p <= b; ++p) {
        for (std::size_t q = p + 1; q <= b; ++q) {
            const Order local = compare_under(order, segment_suffix(x, p, b), segment_suffix(x, q, b));
            const Order full = compare_under(order, suffix(x, p), suffix(x, q));
            if (local != full) return Incompatibility{p, q, local, full};
        }
    }
    return std::nullopt;
}

bool compatibility_check(WordView x, std::size_t i, std::size_t j, SuffixOrder order) {
    return !find_incompatibility(x, factorize(x), i, j, order).has_value();
}

}  // namespace vorder
