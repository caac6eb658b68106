#include <algorithm>

#include "vorder/compare.hpp"

namespace vorder {

std::size_t star_position(WordView x) noexcept {
    std::size_t h = x.size();  // 1-based start of the nondecreasing suffix
    while (h > 1 && x[h - 2] <= x[h - 1]) --h;
    return h;
}

Word star_delete(WordView x) {
    if (x.empty()) throw EmptyString("star_delete");
    const std::size_t h = star_position(x);
    Word out;
    out.reserve(x.size() - 1);
    out.insert(out.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h - 1));
    out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(h), x.end());
    return out;
}

StarPath star_path(WordView x) {
    StarPath path;
    path.states.reserve(x.size() + 1);
    path.deleted_positions.reserve(x.size());
    path.states.emplace_back(x.begin(), x.end());
    while (!path.states.back().empty()) {
        const Word& cur = path.states.back();
        path.deleted_positions.push_back(star_position(cur));
        Word next = star_delete(cur);
        path.states.push_back(std::move(next));
    }
    return path;
}

Order compare_star_oracle(WordView x, WordView y) {
    if (std::ranges::equal(x, y)) return Order::EQ;
    const StarPath px = star_path(x);
    const StarPath py = star_path(y);
    // the state of length L on the path of w is states[|w| - L]
    auto state_x = [&](std::size_t len) -> const Word& { return px.states[x.size() - len]; };
    auto state_y = [&](std::size_t len) -> const Word& { return py.states[y.size() - len]; };

    if (x.size() < y.size() && std::ranges::equal(state_y(x.size()), x)) return Order::LT;
    if (y.size() < x.size() && std::ranges::equal(state_x(y.size()), y)) return Order::GT;

    // Deepest meeting point of the two paths; both reach the empty word.
    std::size_t meet = std::min(x.size(), y.size()) - 1;
    while (state_x(meet) != state_y(meet)) --meet;

    const Word& s = state_x(meet + 1);
    const Word& t = state_y(meet + 1);
    for (std::size_t j = s.size(); j-- > 0;) {
        if (s[j] != t[j]) return order_of(s[j], t[j]);
    }
    return Order::EQ;  // unreachable: s != t by construction
}

namespace {

std::size_t block_end(WordView w, std::size_t from, Letter g) noexcept {
    while (from < w.size() && w[from] != g) ++from;
    return from;
}

Order vform_recursive(WordView x, WordView y, std::size_t& letters) {
    if (x.empty() || y.empty()) return order_of(x.size(), y.size());
    letters += x.size() + y.size();
    const MaxCount mx = max_count(x);
    const MaxCount my = max_count(y);
    if (mx.max_letter != my.max_letter) return order_of(mx.max_letter, my.max_letter);  // C1
    if (mx.count != my.count) return order_of(mx.count, my.count);                    // C2

    // C3: least block index h with x_h != y_h decides by recursion. Blocks
    // are free of g, so the recursion strictly lowers the largest letter.
    const Letter g = mx.max_letter;
    std::size_t i = 0, j = 0;
    for (;;) {
        const std::size_t ei = block_end(x, i, g);
        const std::size_t ej = block_end(y, j, g);
        letters += (ei - i) + (ej - j);
        WordView bx = x.subspan(i, ei - i);
        WordView by = y.subspan(j, ej - j);
        if (!std::ranges::equal(bx, by)) return vform_recursive(bx, by, letters);
        if (ei == x.size()) return Order::EQ;
        i = ei + 1;
        j = ej + 1;
    }
}

}  // namespace

Order compare_vform(WordView x, WordView y) {
    std::size_t letters = 0;
    return vform_recursive(x, y, letters);
}

CompareWork compare_vform_counted(WordView x, WordView y) {
    CompareWork w;
    w.order = vform_recursive(x, y, w.letters);
    return w;
}

bool subsequence_precedes(WordView v, WordView x) noexcept {
    if (v.size() >= x.size()) return false;
    std::size_t i = 0;
    for (std::size_t j = 0; j < x.size() && i < v.size(); ++j) {
        if (x[j] == v[i]) ++i;
    }
    return i == v.size();
}

}  // namespace vorder
