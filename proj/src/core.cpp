#include "vorder/core.hpp"

#include <charconv>
#include <limits>

namespace vorder {

EmptyString::EmptyString(std::string_view operation)
    : Error(std::string(operation) + ": empty string has no V-form") {}

UnknownSymbol::UnknownSymbol(std::size_t position, std::string symbol)
    : Error("unknown symbol '" + symbol + "' at position " + std::to_string(position)),
      position_(position),
      symbol_(std::move(symbol)) {}

std::string_view to_string(Order o) noexcept {
    switch (o) {
        case Order::LT: return "LT";
        case Order::EQ: return "EQ";
        case Order::GT: return "GT";
    }
    return "??";
}

Alphabet Alphabet::bytes() {
    std::vector<std::string> symbols;
    symbols.reserve(256);
    for (int b = 0; b < 256; ++b) symbols.emplace_back(1, static_cast<char>(b));
    return from_symbols(std::move(symbols));
}

Alphabet Alphabet::numeric() {
    Alphabet a;
    a.numeric_ = true;
    return a;
}

Alphabet Alphabet::from_symbols(std::vector<std::string> symbols) {
    if (symbols.empty()) throw Error("alphabet must contain at least one symbol");
    if (symbols.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
        throw Error("alphabet too large");
    Alphabet a;
    a.ranks_.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (!a.ranks_.emplace(symbols[i], static_cast<Letter>(i)).second)
            throw Error("duplicate alphabet symbol '" + symbols[i] + "'");
    }
    a.symbols_ = std::move(symbols);
    return a;
}

Alphabet Alphabet::from_chars(std::string_view chars) {
    std::vector<std::string> symbols;
    symbols.reserve(chars.size());
    for (char c : chars) symbols.emplace_back(1, c);
    return from_symbols(std::move(symbols));
}

bool Alphabet::rank_of(std::string_view symbol, Letter& rank) const {
    if (numeric_) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(symbol.data(), symbol.data() + symbol.size(), value);
        if (ec != std::errc{} || ptr != symbol.data() + symbol.size() || value < 1 ||
            value > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
            return false;
        rank = static_cast<Letter>(value - 1);
        return true;
    }
    auto it = ranks_.find(std::string(symbol));
    if (it == ranks_.end()) return false;
    rank = it->second;
    return true;
}

std::string Alphabet::symbol_of(Letter rank) const {
    if (numeric_) return std::to_string(static_cast<std::uint64_t>(rank) + 1);
    if (rank >= symbols_.size()) throw Error("rank " + std::to_string(rank) + " outside alphabet");
    return symbols_[rank];
}

Word bind(std::span<const std::string> symbols, const Alphabet& alphabet) {
    Word out;
    out.reserve(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        Letter r = 0;
        if (!alphabet.rank_of(symbols[i], r)) throw UnknownSymbol(i + 1, symbols[i]);
        out.push_back(r);
    }
    return out;
}

Word bind_text(std::string_view text, const Alphabet& alphabet) {
    std::vector<std::string> symbols;
    symbols.reserve(text.size());
    for (char c : text) symbols.emplace_back(1, c);
    return bind(symbols, alphabet);
}

Word bind_ints(std::string_view line, const Alphabet& alphabet) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        if (j > i) tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return bind(tokens, alphabet);
}

std::string render(WordView word, const Alphabet& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (alphabet.is_numeric() && i > 0) out += ' ';
        out += alphabet.symbol_of(word[i]);
    }
    return out;
}

Word VForm::reassemble() const {
    Word out;
    out.reserve(source_length);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) out.push_back(max_letter);
        out.insert(out.end(), blocks[i].begin(), blocks[i].end());
    }
    return out;
}

MaxCount max_count(WordView x) noexcept {
    MaxCount mc{x.front(), 0};
    for (Letter c : x) {
        if (c > mc.max_letter) {
            mc.max_letter = c;
            mc.count = 1;
        } else if (c == mc.max_letter) {
            ++mc.count;
        }
    }
    return mc;
}

VForm vform(WordView x) {
    if (x.empty()) throw EmptyString("vform");
    auto [g, k] = max_count(x);
    VForm f;
    f.max_letter = g;
    f.count = k;
    f.source_length = x.size();
    f.blocks.reserve(k + 1);
    f.blocks.emplace_back();
    for (Letter c : x) {
        if (c == g)
            f.blocks.emplace_back();
        else
            f.blocks.back().push_back(c);
    }
    return f;
}

}  // namespace vorder
