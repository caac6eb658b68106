// V-words and the greedy factorization of a word into V-words.
#ifndef VORDER_FACTOR_HPP
#define VORDER_FACTOR_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "vorder/core.hpp"

namespace vorder {

/// A V-word is strictly smaller in V-order than each of its other rotations.
/// Decided by brute force over all rotations. Throws EmptyString.
bool is_vword(WordView w);

struct Factorization {
    std::vector<Word> factors;
    std::vector<std::size_t> ends;  // 1-based last position of each factor
};

/// Repeatedly takes the longest V-word prefix of the unfactored suffix.
/// Throws EmptyString.
Factorization factorize(WordView x);

/// Same factorization, fed one letter at a time. A factor is reported as
/// soon as no later letter can extend it: that happens when a letter larger
/// than the factor's first letter shows up, or at finish().
class OnlineFactorizer {
public:
    using Sink = std::function<void(WordView factor, std::size_t end)>;

    explicit OnlineFactorizer(Sink sink);

    void push(Letter c);
    void finish();

    std::size_t emitted_letters() const noexcept { return emitted_; }

private:
    void emit_front();

    Sink sink_;
    Word pending_;
    std::size_t emitted_ = 0;
};

enum class VfCondition { C1, C2, C3, Equal };

/// What the factorizer does with a pair in each case: a differing maximal
/// letter forces a boundary, a differing count leaves the decision to the
/// Hybrid Lyndon test on the concatenation, and otherwise the blocks
/// between maximal letters are compared.
enum class VfConsequence { Boundary, HybridLyndonTest, BlockComparison, None };

struct VfCase {
    VfCondition condition = VfCondition::Equal;
    VfConsequence consequence = VfConsequence::None;
    Order order = Order::EQ;
};

VfCase vf_case(WordView xi, WordView xj);

std::string_view to_string(VfCondition c) noexcept;
std::string_view to_string(VfConsequence c) noexcept;

}  // namespace vorder

#endif  // VORDER_FACTOR_HPP
