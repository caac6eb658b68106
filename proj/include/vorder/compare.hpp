// V-order comparison. Four independent routes to the same total order:
//
//   compare_star_oracle      walks the star tree (definition, slow reference)
//   compare_vform            recursive max letter / count / block rule
//   compare_input_sensitive  single scan plus local letter counts
//   compare_streaming        incremental prefix order with fast-path rules
//
// All of them treat the empty word as smaller than every nonempty word.
#ifndef VORDER_COMPARE_HPP
#define VORDER_COMPARE_HPP

#include <cstddef>
#include <vector>

#include "vorder/core.hpp"

namespace vorder {

/// Deletes x[h] where h is the start of the maximal nondecreasing suffix
/// (h = 1 when x is nondecreasing). Throws EmptyString.
Word star_delete(WordView x);

/// 1-based position h removed by star_delete; x must be nonempty.
std::size_t star_position(WordView x) noexcept;

struct StarPath {
    std::vector<Word> states;                   // x, x*, x**, ..., empty
    std::vector<std::size_t> deleted_positions;  // 1-based h for each step
};

StarPath star_path(WordView x);

Order compare_star_oracle(WordView x, WordView y);

/// Letters read while comparing, used by the benchmark.
struct CompareWork {
    Order order = Order::EQ;
    std::size_t letters = 0;
};

Order compare_vform(WordView x, WordView y);
CompareWork compare_vform_counted(WordView x, WordView y);

/// True iff v is a proper subsequence of x (in which case v precedes x).
bool subsequence_precedes(WordView v, WordView x) noexcept;

enum class DecidedAt { Step1, Step2, Step5 };

struct InputSensitiveTrace {
    Order order = Order::EQ;
    DecidedAt decided_at = DecidedAt::Step1;
    std::size_t mismatch = 0;  // 1-based first letter mismatch, 0 if not reached
    std::size_t window_x = 0;  // length of x[h..l_x]
    std::size_t window_y = 0;
    std::size_t letters_after_step1 = 0;
};

Order compare_input_sensitive(WordView x, WordView y);
InputSensitiveTrace compare_input_sensitive_traced(WordView x, WordView y);

/// Which rule produced the most recent stream order.
enum class StreamRule { Initial, SameLetter, EqualBefore, Monotone, SubsequenceExtension, Recomputed };

/// Maintains the order of x and y while letters are appended to both.
class PrefixStream {
public:
    PrefixStream() = default;
    PrefixStream(Word x, Word y);

    /// Appends a to x and b to y.
    Order push(Letter a, Letter b);
    /// One-sided appends, for streams over words of different lengths.
    Order push_x(Letter a);
    Order push_y(Letter b);

    Order order() const noexcept { return order_; }
    const Word& x() const noexcept { return x_; }
    const Word& y() const noexcept { return y_; }
    std::size_t fallback_count() const noexcept { return fallbacks_; }
    StreamRule last_rule() const noexcept { return rule_; }

private:
    Order recompute();

    Word x_, y_;
    Order order_ = Order::EQ;
    std::size_t fallbacks_ = 0;
    StreamRule rule_ = StreamRule::Initial;
};

/// Maintains the order of x and y while letters are prepended to both.
class SuffixStream {
public:
    SuffixStream() = default;
    SuffixStream(const Word& x, const Word& y);

    /// Prepends a to x and b to y.
    Order push(Letter a, Letter b);
    Order push_x(Letter a);
    Order push_y(Letter b);

    Order order() const noexcept { return order_; }
    Word x() const;
    Word y() const;
    std::size_t fallback_count() const noexcept { return fallbacks_; }
    StreamRule last_rule() const noexcept { return rule_; }

private:
    Order recompute();

    // stored reversed so that prepending is a push_back
    Word rx_, ry_;
    Order order_ = Order::EQ;
    std::size_t fallbacks_ = 0;
    StreamRule rule_ = StreamRule::Initial;
};

/// Feeds x and y through a PrefixStream, aligned letters first and then the
/// tail of the longer word.
Order compare_streaming(WordView x, WordView y);

}  // namespace vorder

#endif  // VORDER_COMPARE_HPP
