// Alphabets, rank strings and V-form decomposition shared by every other
// part of the library.
#ifndef VORDER_CORE_HPP
#define VORDER_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vorder {

/// A letter is the rank of a symbol in its alphabet. Comparators only rely
/// on the natural order of ranks, so tests may use any unsigned values.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyString : public Error {
public:
    explicit EmptyString(std::string_view operation);
};

class UnknownSymbol : public Error {
public:
    UnknownSymbol(std::size_t position, std::string symbol);
    std::size_t position() const noexcept { return position_; }  // 1-based
    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::size_t position_;
    std::string symbol_;
};

enum class Order : std::int8_t { LT = -1, EQ = 0, GT = 1 };

constexpr Order reverse(Order o) noexcept { return static_cast<Order>(-static_cast<int>(o)); }

template <typename T>
constexpr Order order_of(const T& a, const T& b) noexcept {
    return a < b ? Order::LT : (b < a ? Order::GT : Order::EQ);
}

std::string_view to_string(Order o) noexcept;

/// Explicit total order on external symbols. Two kinds exist: a finite list
/// of symbols (rank = list index) and the unbounded numeric alphabet
/// 1 < 2 < 3 < ... used for integer input (rank = value - 1).
class Alphabet {
public:
    /// Every byte value, ordered by unsigned byte value.
    static Alphabet bytes();
    /// Decimal integers >= 1 in numeric order.
    static Alphabet numeric();
    /// Throws Error on duplicate or empty symbol lists.
    static Alphabet from_symbols(std::vector<std::string> symbols);
    /// Each character of `chars` is one symbol, in the given order.
    static Alphabet from_chars(std::string_view chars);

    bool is_numeric() const noexcept { return numeric_; }
    /// Number of symbols; 0 for the unbounded numeric alphabet.
    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }

    /// Returns false when the symbol is not part of the alphabet.
    bool rank_of(std::string_view symbol, Letter& rank) const;
    std::string symbol_of(Letter rank) const;

private:
    bool numeric_ = false;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Letter> ranks_;
};

/// Maps external symbols to ranks. Throws UnknownSymbol with the 1-based
/// position of the first symbol missing from the alphabet.
Word bind(std::span<const std::string> symbols, const Alphabet& alphabet);
/// Text input: every byte is one symbol.
Word bind_text(std::string_view text, const Alphabet& alphabet);
/// Integer input: whitespace-separated decimal tokens.
Word bind_ints(std::string_view line, const Alphabet& alphabet);

/// Inverse of bind: concatenated symbols for finite alphabets, space
/// separated decimal values for the numeric one.
std::string render(WordView word, const Alphabet& alphabet);

/// x = x_0 g x_1 g ... g x_k with g the largest letter occurring k times.
struct VForm {
    Letter max_letter = 0;
    std::size_t count = 0;
    std::vector<Word> blocks;  // k + 1 blocks, none containing max_letter
    std::size_t source_length = 0;

    Word reassemble() const;
};

/// Throws EmptyString for the empty word, which has no largest letter.
VForm vform(WordView x);

/// Largest letter and its multiplicity; x must be nonempty.
struct MaxCount {
    Letter max_letter = 0;
    std::size_t count = 0;
};
MaxCount max_count(WordView x) noexcept;

}  // namespace vorder

#endif  // VORDER_CORE_HPP
