// vorder: command-line front end for the V-order library.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vorder/checks.hpp"
#include "vorder/compare.hpp"
#include "vorder/core.hpp"
#include "vorder/factor.hpp"
#include "vorder/suffix.hpp"

using namespace vorder;
using nlohmann::json;

namespace {

// The star-tree oracle keeps every state of the path; skip it on long input.
constexpr std::size_t kOracleLimit = 2000;

struct Config {
    std::string mode = "text";
    std::string alphabet;
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t max_n = 0;  // 0: per-command default
    Letter sigma = 0;
    std::vector<std::string> inputs;  // compare: strings; others: files
    std::vector<std::string> skip;
    bool scaling = false;
};

struct InputError {
    std::string message;
};

struct Line {
    std::string source;
    std::size_t number = 0;
    std::string text;
};

class Runner {
public:
    explicit Runner(const Config& cfg) : cfg_(cfg), alphabet_(make_alphabet(cfg)) {}

    int compare();
    int factor();
    int sa();
    int bwt();
    int check();
    int bench();

private:
    static Alphabet make_alphabet(const Config& cfg) {
        if (cfg.mode == "ints") {
            if (!cfg.alphabet.empty()) throw InputError{"--alphabet cannot be combined with --mode ints"};
            return Alphabet::numeric();
        }
        if (cfg.alphabet.empty()) return Alphabet::bytes();
        try {
            return Alphabet::from_chars(cfg.alphabet);
        } catch (const Error& e) {
            throw InputError{std::string("--alphabet: ") + e.what()};
        }
    }

    Word parse(const std::string& text, const std::string& where) const {
        try {
            return cfg_.mode == "ints" ? bind_ints(text, alphabet_) : bind_text(text, alphabet_);
        } catch (const UnknownSymbol& e) {
            throw InputError{where + ", position " + std::to_string(e.position()) + ": symbol '" + e.symbol() +
                             "' is not in the alphabet"};
        }
    }

    std::string show(WordView w) const { return render(w, alphabet_); }

    std::vector<Line> read_lines() const {
        std::vector<Line> out;
        auto slurp = [&](std::istream& in, const std::string& name) {
            std::string text;
            std::size_t number = 0;
            while (std::getline(in, text)) {
                ++number;
                if (!text.empty() && text.back() == '\r') text.pop_back();
                out.push_back({name, number, text});
            }
        };
        if (cfg_.inputs.empty()) {
            slurp(std::cin, "stdin");
        } else {
            for (const auto& path : cfg_.inputs) {
                std::ifstream f(path);
                if (!f) throw InputError{"cannot open " + path};
                slurp(f, path);
            }
        }
        return out;
    }

    // Nonblank input lines parsed into words.
    template <class F>
    void for_each_word(F&& f) const {
        for (const Line& l : read_lines()) {
            if (l.text.find_first_not_of(" \t") == std::string::npos) continue;
            f(parse(l.text, l.source + ":" + std::to_string(l.number)));
        }
    }

    void emit(const json& j) const { std::cout << j.dump() << '\n'; }

    int compare_pair(const Word& x, const Word& y) const;

    const Config& cfg_;
    Alphabet alphabet_;
};

std::string_view decided_at_name(DecidedAt d) {
    switch (d) {
        case DecidedAt::Step1: return "step1";
        case DecidedAt::Step2: return "step2";
        case DecidedAt::Step5: return "step5";
    }
    return "";
}

int Runner::compare_pair(const Word& x, const Word& y) const {
    const CompareWork vf = compare_vform_counted(x, y);
    const InputSensitiveTrace is = compare_input_sensitive_traced(x, y);
    PrefixStream stream;
    const std::size_t common = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < common; ++i) stream.push(x[i], y[i]);
    for (std::size_t i = common; i < x.size(); ++i) stream.push_x(x[i]);
    for (std::size_t i = common; i < y.size(); ++i) stream.push_y(y[i]);
    std::optional<Order> oracle;
    if (x.size() <= kOracleLimit && y.size() <= kOracleLimit) oracle = compare_star_oracle(x, y);

    const bool agree = is.order == vf.order && stream.order() == vf.order && (!oracle || *oracle == vf.order);
    if (!cfg_.json) {
        std::cout << to_string(vf.order) << '\n';
    } else {
        json j;
        j["x"] = show(x);
        j["y"] = show(y);
        j["order"] = to_string(vf.order);
        j["star_oracle"] = oracle ? json(to_string(*oracle)) : json(nullptr);
        j["vform"] = {{"order", to_string(vf.order)}, {"letters", vf.letters}};
        j["input_sensitive"] = {{"order", to_string(is.order)},
                                {"decided_at", decided_at_name(is.decided_at)},
                                {"mismatch", is.mismatch},
                                {"window_x", is.window_x},
                                {"window_y", is.window_y},
                                {"letters_after_step1", is.letters_after_step1}};
        j["streaming"] = {{"order", to_string(stream.order())}, {"fallbacks", stream.fallback_count()}};
        j["agree"] = agree;
        emit(j);
    }
    if (!agree) {
        std::cerr << "error: comparators disagree on " << show(x) << " / " << show(y) << '\n';
        return 1;
    }
    return 0;
}

int Runner::compare() {
    if (cfg_.inputs.size() == 2) {
        return compare_pair(parse(cfg_.inputs[0], "argument 1"), parse(cfg_.inputs[1], "argument 2"));
    }
    if (!cfg_.inputs.empty()) throw InputError{"compare takes two strings, or none to read pairs from stdin"};
    // stdin: one tab-separated pair per line
    int status = 0;
    for (const Line& l : read_lines()) {
        if (l.text.empty()) continue;
        const std::string where = l.source + ":" + std::to_string(l.number);
        const auto tab = l.text.find('\t');
        if (tab == std::string::npos) throw InputError{where + ": expected two strings separated by a tab"};
        status |= compare_pair(parse(l.text.substr(0, tab), where + " (first)"),
                               parse(l.text.substr(tab + 1), where + " (second)"));
    }
    return status;
}

int Runner::factor() {
    bool first = true;
    for_each_word([&](const Word& x) {
        if (x.empty()) return;
        json factors = json::array();
        if (!cfg_.json && !first) std::cout << '\n';
        first = false;
        OnlineFactorizer f([&](WordView fac, std::size_t end) {
            if (cfg_.json) {
                factors.push_back({{"factor", show(fac)}, {"end", end}});
            } else {
                std::cout << end << '\t' << show(fac) << std::endl;  // flushed as each factor closes
            }
        });
        for (Letter c : x) f.push(c);
        f.finish();
        if (cfg_.json) emit({{"input", show(x)}, {"factors", factors}});
    });
    return 0;
}

int Runner::sa() {
    for_each_word([&](const Word& x) {
        const SuffixArray s = suffix_array_lexext(x);
        if (cfg_.json) {
            emit({{"input", show(x)}, {"suffix_array", s.order}});
            return;
        }
        for (std::size_t i = 0; i < s.order.size(); ++i) std::cout << (i ? " " : "") << s.order[i];
        std::cout << '\n';
    });
    return 0;
}

int Runner::bwt() {
    for_each_word([&](const Word& x) {
        const BwtResult b = bwt_incremental(x);
        if (cfg_.json) {
            emit({{"input", show(x)}, {"transformed", show(b.transformed)}, {"primary_index", b.primary_index}});
        } else {
            std::cout << show(b.transformed) << '\t' << b.primary_index << '\n';
        }
    });
    return 0;
}

int Runner::check() {
    using namespace vorder::checks;
    const std::uint64_t s = cfg_.seed;
    const std::size_t n = cfg_.max_n ? cfg_.max_n : 64;
    const Letter sigma = cfg_.sigma ? cfg_.sigma : 6;
    const std::size_t small = std::min<std::size_t>(n, 12);
    const std::size_t count = 2000;

    struct Named {
        std::string key;
        std::function<Result()> run;
    };
    const std::vector<Named> suite = {
        {"goldens", [] { return golden_examples(); }},
        {"agreement", [&] { return comparator_agreement_exhaustive(std::min<Letter>(sigma, 3), std::min<std::size_t>(small, 5)); }},
        {"agreement-random", [&] { return comparator_agreement_random(count, sigma, n, s); }},
        {"subsequence", [&] { return subsequence_property(count, s + 1); }},
        {"append-prepend", [&] { return append_prepend(count, s + 2); }},
        {"context", [&] { return context_invariance(count, s + 3); }},
        {"insertion", [&] { return insertion_invariance(count, s + 4); }},
        {"insertion-string", [&] { return insertion_string_invariance(count, s + 5); }},
        {"insertion-counterexample", [] { return insertion_counterexample(); }},
        {"monotone", [&] { return monotone_extension(count, s + 6); }},
        {"monotone-non-converse", [] { return monotone_non_converse(); }},
        {"chain", [&] { return chain_property(count, s + 7); }},
        {"streams", [&] { return stream_consistency(count, s + 8); }},
        {"total-order", [&] { return total_order_axioms(2, std::min<std::size_t>(small, 5)); }},
        {"lexext-total-order", [&] { return lexext_total_order(2, std::min<std::size_t>(small, 5)); }},
        {"factorization", [&] { return factorization_exhaustive(std::min<Letter>(sigma, 3), std::min<std::size_t>(small, 7)); }},
        {"suffix-vorder", [&] { return suffix_vorder_claim(200, n, s + 9); }},
        {"pipeline", [&] { return pipeline_equivalence(100, std::min<Letter>(sigma, 4), n, s + 10); }},
        {"merge", [&] { return merge_equivalence(100, n, s + 11); }},
        {"compatibility", [&] { return compatibility_exhaustive(2, std::min<std::size_t>(small, 8)); }},
    };

    for (const auto& k : cfg_.skip) {
        if (std::none_of(suite.begin(), suite.end(), [&](const Named& x) { return x.key == k; }))
            throw InputError{"--skip: no check named '" + k + "'"};
    }

    bool all = true;
    for (const auto& c : suite) {
        if (std::find(cfg_.skip.begin(), cfg_.skip.end(), c.key) != cfg_.skip.end()) continue;
        const Result r = c.run();
        all = all && r.passed();
        if (cfg_.json) {
            emit({{"check", c.key},
                  {"name", r.name},
                  {"cases", r.cases},
                  {"failures", r.failures},
                  {"first_failure", r.first_failure}});
        } else {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << c.key << ": " << r.name << " (" << r.cases
                      << " cases, " << r.failures << " failures)\n";
            if (!r.passed()) std::cout << "     first failure: " << r.first_failure << '\n';
        }
        std::cout.flush();
    }
    return all ? 0 : 1;
}

int Runner::bench() {
    using namespace vorder::checks;
    const std::size_t n = cfg_.max_n ? cfg_.max_n : 10000;
    const Letter sigma = cfg_.sigma ? cfg_.sigma : 4;
    if (sigma < 3) throw InputError{"--sigma must be at least 3 for bench"};
    if (!cfg_.json) std::cout << "n\tp\twindow\tsensitive_letters\tvform_letters\n";
    for (std::size_t p : {10u, 100u, 1000u}) {
        for (std::size_t w : {4u, 32u, 256u}) {
            if (p + w > n) continue;
            const SensitivityRow r = input_sensitivity_case(n, p, w, sigma, cfg_.seed + p);
            if (cfg_.json) {
                emit({{"bench", "input_sensitivity"},
                      {"n", r.n},
                      {"mismatch", r.mismatch},
                      {"window", r.window},
                      {"sensitive_letters", r.sensitive_letters},
                      {"vform_letters", r.vform_letters}});
            } else {
                std::cout << r.n << '\t' << r.mismatch << '\t' << r.window << '\t' << r.sensitive_letters << '\t'
                          << r.vform_letters << '\n';
            }
        }
    }
    if (cfg_.scaling) {
        const std::size_t sn = cfg_.max_n ? cfg_.max_n : 1024;
        if (!cfg_.json) std::cout << "\nk\tn\tseconds\tmerge_comparisons\n";
        for (std::size_t k = 1; k <= 16 && k <= sn; ++k) {
            const ScalingRow r = incremental_scaling_case(sn, k, 3);
            if (cfg_.json) {
                emit({{"bench", "incremental_scaling"},
                      {"k", r.k},
                      {"n", r.n},
                      {"seconds", r.seconds},
                      {"merge_comparisons", r.merge_comparisons}});
            } else {
                std::cout << r.k << '\t' << r.n << '\t' << r.seconds << '\t' << r.merge_comparisons << '\n';
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"V-order string comparison, factorization, suffix sorting and BWT"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    app.add_option("--mode", cfg.mode, "Input letters: text (one byte per letter) or ints (whitespace-separated values >= 1)")
        ->check(CLI::IsMember({"text", "ints"}));
    app.add_option("--alphabet", cfg.alphabet, "Symbols of the text alphabet, smallest first");
    app.add_flag("--json", cfg.json, "Emit JSON Lines");
    app.add_option("--seed", cfg.seed, "Seed for check and bench");
    app.add_option("--max-n", cfg.max_n, "Largest generated string length for check and bench");
    app.add_option("--sigma", cfg.sigma, "Alphabet size for generated strings");

    auto* compare = app.add_subcommand("compare", "Compare two strings; without arguments reads tab-separated pairs");
    compare->add_option("strings", cfg.inputs, "The two strings")->expected(0, 2);
    auto* factor = app.add_subcommand("factor", "Print the V-word factors with their end positions");
    auto* sa = app.add_subcommand("sa", "Print the lex-extension suffix array");
    auto* bwt = app.add_subcommand("bwt", "Print the V-order BWT and its primary index");
    for (auto* sub : {factor, sa, bwt}) sub->add_option("files", cfg.inputs, "Input files, one string per line");
    auto* check = app.add_subcommand("check", "Run the property suite");
    check->add_option("--skip", cfg.skip, "Names of checks to leave out");
    auto* bench = app.add_subcommand("bench", "Letters inspected by the comparators");
    bench->add_flag("--scaling", cfg.scaling, "Also time the incremental BWT over 1..16 factors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Runner r(cfg);
        if (*compare) return r.compare();
        if (*factor) return r.factor();
        if (*sa) return r.sa();
        if (*bwt) return r.bwt();
        if (*check) return r.check();
        return r.bench();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 2;
    } catch (const EmptyString& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
