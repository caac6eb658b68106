#include "vorder/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "vorder/compare.hpp"
#include "vorder/factor.hpp"

namespace vorder::checks {

namespace {

using Clock = std::chrono::steady_clock;

class Tally {
public:
    explicit Tally(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++result_.cases;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = describe();
    }

    Result done() {
        result_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(result_);
    }

private:
    Result result_;
    Clock::time_point start_;
};

struct NamedComparator {
    const char* name;
    Order (*compare)(WordView, WordView);
};

constexpr NamedComparator kComparators[] = {
    {"star_oracle", compare_star_oracle},
    {"vform", compare_vform},
    {"input_sensitive", compare_input_sensitive},
    {"streaming", compare_streaming},
};

// Empty string when all comparators agree, else a description.
std::string disagreement(WordView x, WordView y) {
    const Order reference = kComparators[0].compare(x, y);
    for (const auto& c : kComparators) {
        const Order o = c.compare(x, y);
        if (o != reference) {
            std::ostringstream os;
            os << "x=" << show(x) << " y=" << show(y) << ": " << kComparators[0].name << '='
               << to_string(reference) << " but " << c.name << '=' << to_string(o);
            return os.str();
        }
    }
    return {};
}

// Empty string when every comparator returns `expected`.
std::string all_return(WordView x, WordView y, Order expected) {
    for (const auto& c : kComparators) {
        const Order o = c.compare(x, y);
        if (o != expected) {
            std::ostringstream os;
            os << c.name << "(" << show(x) << ", " << show(y) << ") = " << to_string(o) << ", expected "
               << to_string(expected);
            return os.str();
        }
    }
    return {};
}

Word digits(std::string_view s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Letter>(c - '0'));
    return w;
}

Word power(const Word& w, std::size_t times) {
    Word out;
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// Offset in x of the start (before = true) or end of block i's content.
std::size_t block_offset(const VForm& f, std::size_t i, bool before) {
    std::size_t off = i;  // maximal letters preceding block i
    for (std::size_t t = 0; t < i; ++t) off += f.blocks[t].size();
    return before ? off : off + f.blocks[i].size();
}

Word insert_at(const Word& w, std::size_t offset, WordView what) {
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(offset));
    out.insert(out.end(), what.begin(), what.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(offset), w.end());
    return out;
}

// Independent pair generator: half unrelated, half near-copies.
std::pair<Word, Word> random_pair(Rng& rng, std::size_t max_n, Letter max_sigma) {
    const Letter sigma = rng.letter(1, max_sigma);
    Word x = rng.word(1, max_n, sigma);
    Word y = rng.uniform(0, 1) == 0 ? rng.word(1, max_n, sigma) : rng.mutate(x, sigma);
    if (y.empty()) y.push_back(1);
    if (y.size() > max_n) y.resize(max_n);
    return {std::move(x), std::move(y)};
}

Result total_order_over(std::string name, const std::vector<Word>& words, Order (*cmp)(WordView, WordView)) {
    Tally t(std::move(name));
    const std::size_t n = words.size();
    std::vector<Order> m(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a * n + b] = cmp(words[a], words[b]);

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Order ab = m[a * n + b];
            t.expect(ab == reverse(m[b * n + a]) && ((ab == Order::EQ) == (a == b)), [&] {
                return "antisymmetry fails for " + show(words[a]) + ", " + show(words[b]);
            });
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (m[a * n + b] != Order::LT) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (m[b * n + c] != Order::LT) continue;
                t.expect(m[a * n + c] == Order::LT, [&] {
                    return "transitivity fails for " + show(words[a]) + " < " + show(words[b]) + " < " +
                           show(words[c]);
                });
            }
        }
    }
    return t.done();
}

}  // namespace

std::size_t Rng::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Word Rng::word(std::size_t min_len, std::size_t max_len, Letter sigma) {
    Word w(uniform(min_len, max_len));
    for (auto& c : w) c = letter(1, sigma);
    return w;
}

Word Rng::mutate(const Word& w, Letter sigma) {
    Word out = w;
    const std::size_t edits = uniform(1, 3);
    for (std::size_t e = 0; e < edits; ++e) {
        switch (uniform(0, 2)) {
            case 0:
                if (!out.empty()) out[uniform(0, out.size() - 1)] = letter(1, sigma);
                break;
            case 1:
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(uniform(0, out.size())), letter(1, sigma));
                break;
            default:
                if (out.size() > 1) out.erase(out.begin() + static_cast<std::ptrdiff_t>(uniform(0, out.size() - 1)));
                break;
        }
    }
    return out;
}

std::vector<Word> all_words(Letter sigma, std::size_t max_len, std::size_t min_len) {
    std::vector<Word> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        Word w(len, 1);
        for (;;) {
            out.push_back(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] == sigma) w[--i] = 1;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return out;
}

std::string show(WordView w) {
    if (w.empty()) return "ε";
    const bool wide = std::ranges::any_of(w, [](Letter c) { return c > 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

Word concat(WordView a, WordView b) {
    Word out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Result golden_examples() {
    Tally t("golden examples");

    const Word x = digits("32415");
    const StarPath path = star_path(x);
    const std::vector<Word> expected_path = {digits("32415"), digits("3245"), digits("345"),
                                             digits("45"), digits("5"), Word{}};
    t.expect(path.states == expected_path, [&] {
        std::string s = "star path of 32415:";
        for (const auto& st : path.states) s += " " + show(st);
        return s;
    });

    struct Golden {
        const char* x;
        const char* y;
    };
    // each pair is x < y
    constexpr Golden pairs[] = {
        {"45", "32415"}, {"43133", "14323"}, {"2442", "3441"}, {"4422", "4413"},
        {"1323", "3133"}, {"441", "442"},
    };
    for (const auto& g : pairs) {
        const Word a = digits(g.x), b = digits(g.y);
        std::string err = all_return(a, b, Order::LT);
        if (err.empty()) err = all_return(b, a, Order::GT);
        t.expect(err.empty(), [&] { return err; });
    }

    const Alphabet latin = Alphabet::from_chars("abcdefghijklmnopqrstuvwxyz");
    const std::vector<std::string> dictionary = {"sop", "top", "strop", "strophe", "catastrophe"};
    std::vector<Word> words;
    for (const auto& s : dictionary) words.push_back(bind_text(s, latin));
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        const std::string err = all_return(words[i], words[i + 1], Order::LT);
        t.expect(err.empty(), [&] { return dictionary[i] + " vs " + dictionary[i + 1] + ": " + err; });
    }
    std::vector<Word> sorted = words;
    std::ranges::reverse(sorted);
    std::ranges::sort(sorted, [](const Word& a, const Word& b) { return compare_vform(a, b) == Order::LT; });
    t.expect(sorted == words, [] { return std::string("sorted dictionary differs"); });
    // the first step is settled by the largest letter, the rest are subsequences
    t.expect(max_count(words[0]).max_letter < max_count(words[1]).max_letter,
             [] { return std::string("sop/top not decided by largest letter"); });
    for (std::size_t i = 1; i + 1 < words.size(); ++i)
        t.expect(subsequence_precedes(words[i], words[i + 1]),
                 [&] { return dictionary[i] + " is not a subsequence of " + dictionary[i + 1]; });
    return t.done();
}

Result comparator_agreement_exhaustive(Letter sigma, std::size_t max_len) {
    Tally t("comparator agreement (exhaustive)");
    const auto words = all_words(sigma, max_len);
    for (const auto& x : words) {
        for (const auto& y : words) {
            const std::string err = disagreement(x, y);
            t.expect(err.empty(), [&] { return err; });
        }
    }
    return t.done();
}

Result comparator_agreement_random(std::size_t pairs, Letter max_sigma, std::size_t max_n, std::uint64_t seed) {
    Tally t("comparator agreement (random)");
    Rng rng(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        auto [x, y] = random_pair(rng, max_n, max_sigma);
        const std::string err = disagreement(x, y);
        t.expect(err.empty(), [&] { return err; });
    }
    return t.done();
}

Result subsequence_property(std::size_t count, std::uint64_t seed) {
    Tally t("subsequence property");
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const Word x = rng.word(1, 24, rng.letter(1, 6));
        Word v;
        for (Letter c : x)
            if (rng.uniform(0, 2) != 0) v.push_back(c);
        if (v.size() == x.size()) v.erase(v.begin() + static_cast<std::ptrdiff_t>(rng.uniform(0, v.size() - 1)));
        t.expect(subsequence_precedes(v, x), [&] { return show(v) + " not found in " + show(x); });
        const std::string err = all_return(v, x, Order::LT);
        t.expect(err.empty(), [&] { return err; });
    }
    return t.done();
}

Result append_prepend(std::size_t count, std::uint64_t seed) {
    Tally t("append/prepend invariance");
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        auto [x, y] = random_pair(rng, 20, 6);
        const Letter lambda = rng.letter(1, 7);
        const Order base = compare_vform(x, y);
        const Word l{lambda};
        const Order appended = compare_vform(concat(x, l), concat(y, l));
        const Order prepended = compare_vform(concat(l, x), concat(l, y));
        t.expect(appended == base && prepended == base, [&] {
            return "x=" + show(x) + " y=" + show(y) + " lambda=" + std::to_string(lambda);
        });
    }
    return t.done();
}

Result context_invariance(std::size_t count, std::uint64_t seed) {
    Tally t("context invariance uxv/uyv");
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        auto [x, y] = random_pair(rng, 16, 6);
        const Word u = rng.word(0, 8, 7), v = rng.word(0, 8, 7);
        const Order base = compare_vform(x, y);
        const Order ctx = compare_vform(concat(concat(u, x), v), concat(concat(u, y), v));
        t.expect(ctx == base, [&] {
            return "x=" + show(x) + " y=" + show(y) + " u=" + show(u) + " v=" + show(v);
        });
    }
    return t.done();
}

namespace {

template <typename MakeInsert>
Result insertion_check(std::string name, std::size_t count, std::uint64_t seed, MakeInsert make_insert) {
    Tally t(std::move(name));
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        auto [x, y] = random_pair(rng, 16, 5);
        const VForm fx = vform(x), fy = vform(y);
        const Letter bound = std::max(fx.max_letter, fy.max_letter);
        const std::size_t i = rng.uniform(0, std::min(fx.count, fy.count));
        const Word ins = make_insert(rng, bound);
        const Order base = compare_vform(x, y);
        const Word xa = insert_at(x, block_offset(fx, i, false), ins);
        const Word ya = insert_at(y, block_offset(fy, i, false), ins);
        const Word xb = insert_at(x, block_offset(fx, i, true), ins);
        const Word yb = insert_at(y, block_offset(fy, i, true), ins);
        t.expect(compare_vform(xa, ya) == base && compare_vform(xb, yb) == base, [&] {
            return "x=" + show(x) + " y=" + show(y) + " insert " + show(ins) + " at block " + std::to_string(i);
        });
    }
    return t.done();
}

}  // namespace

Result insertion_invariance(std::size_t count, std::uint64_t seed) {
    return insertion_check("insertion invariance (letter)", count, seed,
                           [](Rng& rng, Letter bound) { return Word{rng.letter(1, bound)}; });
}

Result insertion_string_invariance(std::size_t count, std::uint64_t seed) {
    return insertion_check("insertion invariance (string)", count, seed, [](Rng& rng, Letter bound) {
        return rng.word(1, 4, bound);
    });
}

Result insertion_counterexample() {
    Tally t("insertion counterexample (letter above both maxima)");
    const Word x = digits("1323"), y = digits("3133");
    const VForm fx = vform(x), fy = vform(y);
    const Word l{4};
    const Word xi = insert_at(x, block_offset(fx, 0, false), l);
    const Word yi = insert_at(y, block_offset(fy, 0, false), l);
    t.expect(xi == digits("14323") && yi == digits("43133"),
             [&] { return "insertion produced " + show(xi) + ", " + show(yi); });
    t.expect(compare_vform(x, y) == Order::LT, [] { return std::string("1323 should precede 3133"); });
    t.expect(compare_vform(yi, xi) == Order::LT, [] { return std::string("43133 should precede 14323"); });
    return t.done();
}

Result monotone_extension(std::size_t count, std::uint64_t seed) {
    Tally t("monotone extension");
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        auto [x, y] = random_pair(rng, 16, 6);
        const Order o = compare_vform(x, y);
        if (o == Order::EQ) continue;
        if (o == Order::GT) std::swap(x, y);
        Letter lambda = rng.letter(1, 7), mu = rng.letter(1, 7);
        if (lambda > mu) std::swap(lambda, mu);
        const Word l{lambda}, m{mu};
        t.expect(compare_vform(concat(l, x), concat(m, y)) == Order::LT &&
                     compare_vform(concat(x, l), concat(y, m)) == Order::LT,
                 [&] {
                     return "x=" + show(x) + " y=" + show(y) + " lambda=" + std::to_string(lambda) +
                            " mu=" + std::to_string(mu);
                 });
    }
    return t.done();
}

Result monotone_non_converse() {
    Tally t("monotone extension has no converse");
    const Word x = digits("442"), y = digits("441");
    t.expect(compare_vform(y, x) == Order::LT, [] { return std::string("441 should precede 442"); });
    t.expect(compare_vform(digits("2442"), digits("3441")) == Order::LT,
             [] { return std::string("2442 should precede 3441"); });
    t.expect(compare_vform(digits("4422"), digits("4413")) == Order::LT,
             [] { return std::string("4422 should precede 4413"); });
    return t.done();
}

Result chain_property(std::size_t count, std::uint64_t seed) {
    Tally t("power chain 1 < u < u^2 < ... < u^i v^j w");
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        const Letter sigma = rng.letter(2, 5);
        Word u = rng.word(2, 5, sigma);
        const Word v = rng.word(1, 5, sigma), w = rng.word(1, 5, sigma);
        const std::size_t i = rng.uniform(2, 4), j = rng.uniform(2, 4);
        std::vector<Word> chain{Word{1}};
        for (std::size_t p = 1; p <= i; ++p) chain.push_back(power(u, p));
        for (std::size_t q = 1; q <= j; ++q) chain.push_back(concat(power(u, i), power(v, q)));
        chain.push_back(concat(chain.back(), w));
        for (std::size_t c = 0; c + 1 < chain.size(); ++c) {
            t.expect(compare_vform(chain[c], chain[c + 1]) == Order::LT,
                     [&] { return show(chain[c]) + " should precede " + show(chain[c + 1]); });
        }
    }
    return t.done();
}

Result stream_consistency(std::size_t count, std::uint64_t seed) {
    Tally t("stream order maintenance");
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        const Letter sigma = rng.letter(1, 5);
        const Word x0 = rng.word(0, 6, sigma), y0 = rng.word(0, 6, sigma);
        PrefixStream ps(x0, y0);
        SuffixStream ss(x0, y0);
        const std::size_t steps = rng.uniform(1, 16);
        for (std::size_t s = 0; s < steps; ++s) {
            const Letter a = rng.letter(1, sigma);
            const Letter b = rng.uniform(0, 2) == 0 ? a : rng.letter(1, sigma);
            switch (rng.uniform(0, 5)) {
                case 0: ps.push_x(a); ss.push_x(a); break;
                case 1: ps.push_y(b); ss.push_y(b); break;
                default: ps.push(a, b); ss.push(a, b); break;
            }
            t.expect(ps.order() == compare_vform(ps.x(), ps.y()) && ss.order() == compare_vform(ss.x(), ss.y()), [&] {
                return "prefix " + show(ps.x()) + "/" + show(ps.y()) + " suffix " + show(ss.x()) + "/" + show(ss.y());
            });
        }
    }
    return t.done();
}

Result total_order_axioms(Letter sigma, std::size_t max_len) {
    return total_order_over("total order axioms (V-order)", all_words(sigma, max_len), compare_vform);
}

Result lexext_total_order(Letter sigma, std::size_t max_len) {
    return total_order_over("total order axioms (lex-extension)", all_words(sigma, max_len), lexext_compare);
}

Result factorization_exhaustive(Letter sigma, std::size_t max_len) {
    Tally t("factorization invariants over {1.." + std::to_string(sigma) + "}, n <= " + std::to_string(max_len));
    for (const auto& x : all_words(sigma, max_len)) {
        const Factorization f = factorize(x);
        Word joined;
        bool ends_ok = f.ends.size() == f.factors.size() && !f.ends.empty() && f.ends.back() == x.size();
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            joined.insert(joined.end(), f.factors[i].begin(), f.factors[i].end());
            ends_ok = ends_ok && f.ends[i] == joined.size();
        }
        bool factors_ok = true, maximal = true;
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            factors_ok = factors_ok && is_vword(f.factors[i]);
            if (i + 1 < f.factors.size()) maximal = maximal && !is_vword(concat(f.factors[i], f.factors[i + 1]));
        }
        std::vector<std::size_t> online_ends;
        OnlineFactorizer online([&](WordView, std::size_t end) { online_ends.push_back(end); });
        for (Letter c : x) online.push(c);
        online.finish();
        const bool idempotent = !is_vword(x) || f.factors.size() == 1;

        t.expect(joined == x && ends_ok && factors_ok && maximal && online_ends == f.ends && idempotent, [&] {
            std::string s = show(x) + " ->";
            for (const auto& fac : f.factors) s += " [" + show(fac) + "]";
            if (joined != x || !ends_ok) s += " (does not reassemble)";
            if (!factors_ok) s += " (factor is not a V-word)";
            if (!maximal) s += " (adjacent factors concatenate to a V-word)";
            if (online_ends != f.ends) s += " (on-line boundaries differ)";
            if (!idempotent) s += " (V-word split)";
            return s;
        });
    }
    return t.done();
}

Result suffix_vorder_claim(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    Tally t("suffixes V-ordered by length");
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        const Word x = rng.word(1, max_n, rng.letter(1, 6));
        const WordView xv(x);
        const SuffixArray sa = suffix_array_vorder(x);
        bool ok = sa.order.size() == x.size();
        for (std::size_t r = 0; ok && r < sa.order.size(); ++r) ok = sa.order[r] == x.size() - r;
        std::size_t bad = 0;
        for (std::size_t i = 1; ok && i < x.size(); ++i) {
            if (compare_vform(xv.subspan(i), xv.subspan(i - 1)) != Order::LT) {
                ok = false;
                bad = i;
            }
        }
        t.expect(ok, [&] { return show(x) + ": suffix " + std::to_string(bad + 1) + " out of order"; });
    }
    return t.done();
}

Result pipeline_equivalence(std::size_t count, Letter max_sigma, std::size_t max_n, std::uint64_t seed,
                            SegmentContext context) {
    Tally t(context == SegmentContext::FullSuffix ? "incremental BWT = direct BWT"
                                                  : "incremental BWT = direct BWT (factor-local segments)");
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        const Word x = rng.word(1, max_n, rng.letter(1, max_sigma));
        const BwtResult direct = bwt_from_sa(x, suffix_array_lexext(x));
        const BwtResult inc = bwt_incremental(x, {context});
        Word a = direct.transformed, b = x;
        std::ranges::sort(a);
        std::ranges::sort(b);
        t.expect(inc.transformed == direct.transformed && inc.primary_index == direct.primary_index && a == b, [&] {
            return show(x) + ": incremental " + show(inc.transformed) + "/" + std::to_string(inc.primary_index) +
                   " direct " + show(direct.transformed) + "/" + std::to_string(direct.primary_index);
        });
    }
    return t.done();
}

Result merge_equivalence(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    Tally t("merged suffix array = direct suffix array");
    Rng rng(seed);
    for (std::size_t n = 0; n < count; ++n) {
        const Word x = rng.word(2, max_n, rng.letter(1, 4));
        const std::size_t m = rng.uniform(1, x.size() - 1);
        const SuffixArray merged =
            merge_sorted_suffixes(segment_suffix_array(x, 1, m), segment_suffix_array(x, m + 1, x.size()), x);
        const SuffixArray direct = suffix_array_lexext(x);
        t.expect(merged.order == direct.order, [&] { return show(x) + " split after " + std::to_string(m); });
    }
    return t.done();
}

Result compatibility_exhaustive(Letter sigma, std::size_t max_len, SuffixOrder order) {
    Tally t(std::string("compatibility of factor ranges (") +
            (order == SuffixOrder::LexExt ? "lex-extension" : "V-order") + ")");
    for (const auto& x : all_words(sigma, max_len)) {
        const Factorization f = factorize(x);
        for (std::size_t i = 1; i <= f.factors.size(); ++i) {
            for (std::size_t j = i; j <= f.factors.size(); ++j) {
                const auto bad = find_incompatibility(x, f, i, j, order);
                t.expect(!bad, [&] {
                    std::string s = show(x) + " =";
                    for (const auto& fac : f.factors) s += " [" + show(fac) + "]";
                    s += ", factors " + std::to_string(i) + ".." + std::to_string(j) + ": suffixes at " +
                         std::to_string(bad->p) + " and " + std::to_string(bad->q) + " are " +
                         std::string(to_string(bad->within_segment)) + " inside the range but " +
                         std::string(to_string(bad->within_word)) + " in the word";
                    return s;
                });
            }
        }
    }
    return t.done();
}

SensitivityRow input_sensitivity_case(std::size_t n, std::size_t p, std::size_t window, Letter sigma,
                                      std::uint64_t seed) {
    Rng rng(seed);
    const Letter g = sigma;
    Word x(n);
    for (auto& c : x) c = rng.letter(1, sigma - 1);
    // maximal letters: one before the mismatch, one closing the window, one at the end
    if (p / 2 >= 1) x[p / 2 - 1] = g;
    x[p + window - 1] = g;
    x[n - 1] = g;
    Word y = x;
    y[p - 1] = x[p - 1] == 1 ? 2 : x[p - 1] - 1;

    SensitivityRow row;
    row.n = n;
    row.mismatch = p;
    row.window = window;
    const InputSensitiveTrace trace = compare_input_sensitive_traced(x, y);
    row.sensitive_letters = trace.letters_after_step1;
    row.vform_letters = compare_vform_counted(x, y).letters;
    return row;
}

Word word_with_k_factors(std::size_t n, std::size_t k) {
    Word x;
    x.reserve(n);
    const std::size_t len = n / k, longer = n % k;
    for (std::size_t i = 0; i < k; ++i) {
        x.push_back(2);
        x.insert(x.end(), len + (i < longer ? 1 : 0) - 1, 1);
    }
    return x;
}

ScalingRow incremental_scaling_case(std::size_t n, std::size_t k, std::size_t repeats) {
    const Word x = word_with_k_factors(n, k);
    ScalingRow row;
    row.k = k;
    row.n = n;
    row.seconds = 1e300;
    for (std::size_t r = 0; r < repeats; ++r) {
        std::size_t comparisons = 0;
        const auto start = Clock::now();
        bwt_incremental(x, {}, [&](const IncrementalStep& s) { comparisons += s.merge.comparisons; });
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        row.seconds = std::min(row.seconds, secs);
        row.merge_comparisons = comparisons;
    }
    return row;
}

}  // namespace vorder::checks
