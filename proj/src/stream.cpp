#include <algorithm>

#include "vorder/compare.hpp"

namespace vorder {

namespace {

// Shared by both directions: the append and prepend rules have the same
// shape, as do the two halves of monotone extension.
bool fast_two_sided(Order& order, Letter a, Letter b, StreamRule& rule) noexcept {
    if (a == b) {
        rule = StreamRule::SameLetter;
        return true;
    }
    if (order == Order::EQ) {
        order = order_of(a, b);
        rule = StreamRule::EqualBefore;
        return true;
    }
    if ((order == Order::LT && a < b) || (order == Order::GT && a > b)) {
        rule = StreamRule::Monotone;
        return true;
    }
    return false;
}

// Growing one side: if the sides were equal, or the grown side was already
// the larger one, the other side is a subsequence of it.
bool fast_one_sided(Order& order, Order grown_wins, StreamRule& rule) noexcept {
    if (order == Order::EQ || order == grown_wins) {
        order = grown_wins;
        rule = StreamRule::SubsequenceExtension;
        return true;
    }
    return false;
}

}  // namespace

PrefixStream::PrefixStream(Word x, Word y)
    : x_(std::move(x)), y_(std::move(y)), order_(compare_vform(x_, y_)) {}

Order PrefixStream::recompute() {
    ++fallbacks_;
    rule_ = StreamRule::Recomputed;
    order_ = compare_vform(x_, y_);
    return order_;
}

Order PrefixStream::push(Letter a, Letter b) {
    x_.push_back(a);
    y_.push_back(b);
    if (fast_two_sided(order_, a, b, rule_)) return order_;
    return recompute();
}

Order PrefixStream::push_x(Letter a) {
    x_.push_back(a);
    if (fast_one_sided(order_, Order::GT, rule_)) return order_;
    return recompute();
}

Order PrefixStream::push_y(Letter b) {
    y_.push_back(b);
    if (fast_one_sided(order_, Order::LT, rule_)) return order_;
    return recompute();
}

SuffixStream::SuffixStream(const Word& x, const Word& y)
    : rx_(x.rbegin(), x.rend()), ry_(y.rbegin(), y.rend()), order_(compare_vform(x, y)) {}

Word SuffixStream::x() const { return Word(rx_.rbegin(), rx_.rend()); }
Word SuffixStream::y() const { return Word(ry_.rbegin(), ry_.rend()); }

Order SuffixStream::recompute() {
    ++fallbacks_;
    rule_ = StreamRule::Recomputed;
    order_ = compare_vform(x(), y());
    return order_;
}

Order SuffixStream::push(Letter a, Letter b) {
    rx_.push_back(a);
    ry_.push_back(b);
    if (fast_two_sided(order_, a, b, rule_)) return order_;
    return recompute();
}

Order SuffixStream::push_x(Letter a) {
    rx_.push_back(a);
    if (fast_one_sided(order_, Order::GT, rule_)) return order_;
    return recompute();
}

Order SuffixStream::push_y(Letter b) {
    ry_.push_back(b);
    if (fast_one_sided(order_, Order::LT, rule_)) return order_;
    return recompute();
}

Order compare_streaming(WordView x, WordView y) {
    PrefixStream s;
    const std::size_t common = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < common; ++i) s.push(x[i], y[i]);
    for (std::size_t i = common; i < x.size(); ++i) s.push_x(x[i]);
    for (std::size_t i = common; i < y.size(); ++i) s.push_y(y[i]);
    return s.order();
}

}  // namespace vorder
