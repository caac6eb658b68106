// Input-sensitive V-order comparison.
//
// One scan finds the largest letters, their counts and the first mismatch.
// If max letter and count agree, everything left of the mismatch can be
// dropped and only the stretch up to the next maximal letter matters. That
// stretch is compared through per-letter counts: count[a] is the number of
// a's before the first letter greater than a. Scanning a from high to low,
// the first differing count decides, the smaller count being the smaller
// word.
#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vorder/compare.hpp"

namespace vorder {

namespace {

// count[a] for every a with a nonzero count, in increasing order of a. A
// letter is counted iff nothing greater precedes it, so the counted letters
// form a nondecreasing run and the table fills in sorted order.
using Counts = std::vector<std::pair<Letter, std::size_t>>;

// Scans w[h..] up to the nearest occurrence of g, returning the window
// length and filling its counts.
std::size_t scan_window(WordView w, std::size_t h, Letter g, Counts& counts, std::size_t& letters) {
    std::size_t p = h - 1;
    for (; p < w.size(); ++p) {
        ++letters;
        const Letter c = w[p];
        if (c == g) break;
        if (counts.empty() || c > counts.back().first) {
            counts.emplace_back(c, 1);
        } else if (c == counts.back().first) {
            ++counts.back().second;
        }
    }
    return p - (h - 1);
}

}  // namespace

InputSensitiveTrace compare_input_sensitive_traced(WordView x, WordView y) {
    InputSensitiveTrace t;
    if (x.empty() || y.empty()) {
        t.order = order_of(x.size(), y.size());
        return t;
    }

    // Step 1, with the Step 2 mismatch position found during the same scan.
    Letter gx = x[0], gy = y[0];
    std::size_t cx = 0, cy = 0;
    std::size_t h = 0;
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i < x.size()) {
            if (x[i] > gx) { gx = x[i]; cx = 1; }
            else if (x[i] == gx) ++cx;
        }
        if (i < y.size()) {
            if (y[i] > gy) { gy = y[i]; cy = 1; }
            else if (y[i] == gy) ++cy;
        }
        if (h == 0 && (i >= x.size() || i >= y.size() || x[i] != y[i])) h = i + 1;
    }
    if (gx != gy) { t.order = order_of(gx, gy); return t; }
    if (cx != cy) { t.order = order_of(cx, cy); return t; }

    t.decided_at = DecidedAt::Step2;
    if (h == 0) return t;  // identical
    t.mismatch = h;

    // Steps 3 and 4 in one pass per word. When h runs past the end of a
    // word its window is empty.
    const Letter g = gx;
    std::size_t& work = t.letters_after_step1;
    Counts kx, ky;
    t.window_x = h <= x.size() ? scan_window(x, h, g, kx, work) : 0;
    t.window_y = h <= y.size() ? scan_window(y, h, g, ky, work) : 0;

    // Step 5: largest letter first; a letter missing from one table has
    // count zero there.
    t.decided_at = DecidedAt::Step5;
    auto ix = kx.rbegin(), iy = ky.rbegin();
    while (ix != kx.rend() || iy != ky.rend()) {
        const Letter a = ix == kx.rend() ? iy->first : iy == ky.rend() ? ix->first : std::max(ix->first, iy->first);
        const std::size_t count_x = ix != kx.rend() && ix->first == a ? (ix++)->second : 0;
        const std::size_t count_y = iy != ky.rend() && iy->first == a ? (iy++)->second : 0;
        if (count_x != count_y) {
            t.order = order_of(count_x, count_y);
            return t;
        }
    }
    throw std::logic_error("compare_input_sensitive: windows of distinct words tied");
}

Order compare_input_sensitive(WordView x, WordView y) {
    return compare_input_sensitive_traced(x, y).order;
}

}  // namespace vorder
