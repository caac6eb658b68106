#include <algorithm>

#include "vorder/compare.hpp"
#include "vorder/factor.hpp"

namespace vorder {

bool is_vword(WordView w) {
    if (w.empty()) throw EmptyString("is_vword");
    Word rotation(w.size());
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::ranges::rotate_copy(w, w.begin() + static_cast<std::ptrdiff_t>(r), rotation.begin());
        if (compare_vform(w, rotation) != Order::LT) return false;
    }
    return true;
}

namespace {

// A prefix holding a letter larger than its first letter has a rotation
// starting at its maximum, whose first block is empty, so it is never a
// V-word. The longest V-word prefix therefore ends before that letter.
std::size_t candidate_limit(WordView rest) noexcept {
    std::size_t limit = 1;
    while (limit < rest.size() && rest[limit] <= rest[0]) ++limit;
    return limit;
}

std::size_t longest_vword_prefix(WordView rest) {
    const std::size_t limit = candidate_limit(rest);
    for (std::size_t len = limit; len > 1; --len) {
        if (is_vword(rest.first(len))) return len;
    }
    return 1;
}

}  // namespace

Factorization factorize(WordView x) {
    if (x.empty()) throw EmptyString("factorize");
    Factorization f;
    std::size_t pos = 0;
    while (pos < x.size()) {
        const std::size_t len = longest_vword_prefix(x.subspan(pos));
        f.factors.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(pos),
                               x.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
        f.ends.push_back(pos);
    }
    return f;
}

OnlineFactorizer::OnlineFactorizer(Sink sink) : sink_(std::move(sink)) {}

void OnlineFactorizer::emit_front() {
    const std::size_t len = longest_vword_prefix(pending_);
    emitted_ += len;
    sink_(WordView(pending_).first(len), emitted_);
    pending_.erase(pending_.begin(), pending_.begin() + static_cast<std::ptrdiff_t>(len));
}

void OnlineFactorizer::push(Letter c) {
    // Emit while the front factor cannot grow any further: its candidate
    // range already stops inside pending_, or c itself closes it.
    while (!pending_.empty() && (candidate_limit(pending_) < pending_.size() || c > pending_[0]))
        emit_front();
    pending_.push_back(c);
}

void OnlineFactorizer::finish() {
    while (!pending_.empty()) emit_front();
}

VfCase vf_case(WordView xi, WordView xj) {
    if (xi.empty() || xj.empty()) throw EmptyString("vf_case");
    const MaxCount a = max_count(xi);
    const MaxCount b = max_count(xj);
    VfCase c;
    c.order = compare_vform(xi, xj);
    if (a.max_letter != b.max_letter) {
        c.condition = VfCondition::C1;
        c.consequence = VfConsequence::Boundary;
    } else if (a.count != b.count) {
        c.condition = VfCondition::C2;
        c.consequence = VfConsequence::HybridLyndonTest;
    } else if (c.order != Order::EQ) {
        c.condition = VfCondition::C3;
        c.consequence = VfConsequence::BlockComparison;
    }
    return c;
}

std::string_view to_string(VfCondition c) noexcept {
    switch (c) {
        case VfCondition::C1: return "C1";
        case VfCondition::C2: return "C2";
        case VfCondition::C3: return "C3";
        case VfCondition::Equal: return "equal";
    }
    return "?";
}

std::string_view to_string(VfConsequence c) noexcept {
    switch (c) {
        case VfConsequence::Boundary: return "boundary";
        case VfConsequence::HybridLyndonTest: return "hybrid-lyndon-test";
        case VfConsequence::BlockComparison: return "block-comparison";
        case VfConsequence::None: return "none";
    }
    return "?";
}

}  // namespace vorder
