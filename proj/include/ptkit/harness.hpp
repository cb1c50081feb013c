#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ptkit/complexity.hpp"
#include "ptkit/json_io.hpp"
#include "ptkit/products.hpp"
#include "ptkit/regex.hpp"
#include "ptkit/rng.hpp"

namespace ptkit {

struct CheckResult {
    enum class Status { Pass, Fail, SkippedResource };

    std::string id;
    Status status = Status::Fail;
    std::string detail;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
};

inline const char* to_string(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "pass";
        case CheckResult::Status::Fail: return "fail";
        case CheckResult::Status::SkippedResource: return "skipped(resource)";
    }
    return "fail";
}

struct RandomConfig {
    int max_states = 6;         // acyclic-DFA generator bound
    int max_alphabet = 3;
    int max_word_len = 4;       // infiltrated word length
    int max_filters = 3;        // filters per boolean combination
    int max_filter_word = 3;
    int max_set_words = 3;      // finite right operands
    int max_set_word_len = 3;
    std::size_t profile_cap = kDefaultProfilePairCap;
};

namespace harness_detail {

using CheckBody = std::function<std::pair<bool, std::string>()>;

inline CheckResult run_check(std::string id, std::uint64_t seed, const CheckBody& body) {
    CheckResult r;
    r.id = std::move(id);
    r.seed = seed;
    auto start = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = body();
        r.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
        r.detail = detail;
    } catch (const ResourceLimitError& e) {
        r.status = CheckResult::Status::SkippedResource;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = CheckResult::Status::Fail;
        r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

inline std::string pad_index(int i) {
    std::string s = std::to_string(i);
    while (s.size() < 3) s.insert(s.begin(), '0');
    return s;
}

inline std::string random_word(SplitMix64& rng, const Alphabet& alphabet, int max_len,
                               int min_len = 0) {
    int len = min_len + rng.below_int(max_len - min_len + 1);
    std::string w;
    for (int i = 0; i < len; ++i) w.push_back(alphabet.letter(rng.below_int(alphabet.size())));
    return w;
}

inline Alphabet random_alphabet(SplitMix64& rng, int max_size) {
    int size = 1 + rng.below_int(max_size);
    return Alphabet(std::string("abc").substr(0, static_cast<std::size_t>(size)));
}

inline ShareSet subset_by_mask(const Alphabet& alphabet, unsigned mask) {
    std::string letters;
    for (int a = 0; a < alphabet.size(); ++a) {
        if (mask & (1u << a)) letters.push_back(alphabet.letter(a));
    }
    return ShareSet(letters);
}

/// Complete DFA whose every move goes to the same state or a later one, so
/// the only loops are self-loops and the language is R-trivial by
/// construction.
inline Dfa random_acyclic_complete_dfa(SplitMix64& rng, const Alphabet& alphabet,
                                       int max_states) {
    int n = 1 + rng.below_int(max_states);
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = n;
    d.initial = 0;
    d.accepting.resize(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) d.accepting[static_cast<std::size_t>(q)] = rng.coin();
    d.delta.resize(static_cast<std::size_t>(n) * alphabet.size());
    for (int q = 0; q < n; ++q) {
        for (int a = 0; a < alphabet.size(); ++a) {
            d.delta[static_cast<std::size_t>(q) * alphabet.size() + static_cast<std::size_t>(a)] =
                q + rng.below_int(n - q);
        }
    }
    return d;
}

/// Random boolean combination of at most `max_filters` principal filters;
/// piecewise-testable by construction.
inline Nfa random_pt_language(SplitMix64& rng, const Alphabet& alphabet,
                              const RandomConfig& cfg) {
    int count = 1 + rng.below_int(cfg.max_filters);
    Nfa acc;
    for (int i = 0; i < count; ++i) {
        Nfa f = filter_automaton(random_word(rng, alphabet, cfg.max_filter_word), alphabet)
                    .to_nfa();
        if (rng.below(4) == 0) f = complement(f);
        if (i == 0) {
            acc = std::move(f);
        } else {
            acc = boolean(rng.coin() ? BoolOp::Union : BoolOp::Intersection, acc, f);
        }
    }
    if (rng.below(4) == 0) acc = complement(acc);
    return minimal_dfa(acc).to_nfa();
}

inline std::vector<std::string> random_word_set(SplitMix64& rng, const Alphabet& alphabet,
                                                const RandomConfig& cfg) {
    int count = rng.below_int(cfg.max_set_words + 1);
    std::vector<std::string> words;
    for (int i = 0; i < count; ++i) {
        words.push_back(random_word(rng, alphabet, cfg.max_set_word_len));
    }
    return words;
}

}  // namespace harness_detail

/// Fixed catalogue reproducing every concrete example, counterexample and
/// complexity identity at desk scale. Entries are independent; order is
/// stable; failures carry a witness or the mismatched values.
inline std::vector<CheckResult> run_catalogue(std::size_t profile_cap = kDefaultProfilePairCap) {
    namespace hd = harness_detail;
    std::vector<CheckResult> out;
    auto add = [&](const std::string& id, std::uint64_t seed, const hd::CheckBody& body) {
        out.push_back(hd::run_check(id, seed, body));
    };

    const Alphabet ab("ab");
    const Alphabet abc("abc");

    add("sol-psi-regex", 0, [&]() -> std::pair<bool, std::string> {
        Nfa by_regex = compile_regex("c*bb*c(b|c)*aa*b(a|b)*", abc);
        Nfa by_filters = boolean(
            BoolOp::Intersection, filter_automaton("ab", abc).to_nfa(),
            boolean(BoolOp::Intersection, filter_automaton("bc", abc).to_nfa(),
                    complement(filter_automaton("ac", abc).to_nfa())));
        auto eq = equivalent(by_regex, by_filters);
        if (!eq.equivalent) return {false, "difference: " + eq.witness->word};
        auto rep = analyze(by_filters);
        if (!rep.pt) return {false, "boolean combination of filters not PT"};
        return {true, ""};
    });

    add("fig1-powerset-cycle", 0, [&]() -> std::pair<bool, std::string> {
        Nfa astar{ab, 1, {0}, {0}, {{0, 'a', 0}}};
        Nfa bstar_a{ab, 2, {0}, {1}, {{0, 'b', 0}, {0, 'a', 1}}};
        Nfa shuf = shuffle(astar, bstar_a);
        Dfa power = determinize(shuf);
        if (power.state_count != 2) {
            return {false, "powerset has " + std::to_string(power.state_count) + " states"};
        }
        auto acyclic = is_acyclic(power);
        if (acyclic.acyclic) return {false, "powerset reported acyclic"};
        if (acyclic.witness->word.size() != 2) {
            return {false, "cycle word '" + acyclic.witness->word + "' is not two letters"};
        }
        Dfa min = minimize(power);
        if (min.state_count != 2 || is_acyclic(min).acyclic) {
            return {false, "minimal DFA should keep the two-state cycle"};
        }
        auto eq = equivalent(power.to_nfa(), compile_regex("(a|b)*a", ab));
        if (!eq.equivalent) return {false, "language mismatch: " + eq.witness->word};
        auto shuffled_acyclic = is_acyclic(shuf);
        if (!shuffled_acyclic.acyclic) return {false, "the shuffle NFA itself must be acyclic"};
        return {true, "cycle " + acyclic.witness->word};
    });

    add("shuffle-astar-abstar-not-pt", 0, [&]() -> std::pair<bool, std::string> {
        Nfa left = compile_regex("a*", ab);
        Nfa right = compile_regex("ab*", ab);
        if (!analyze(left).pt || !analyze(right).pt) return {false, "operands must be PT"};
        Nfa shuf = shuffle(left, right);
        auto eq = equivalent(shuf, compile_regex("a(a|b)*", ab));
        if (!eq.equivalent) return {false, "difference: " + eq.witness->word};
        auto rep = analyze(shuf);
        if (rep.pt) return {false, "a* shuffle ab* reported PT"};
        return {true, ""};
    });

    add("concat-abstar-a-not-pt", 0, [&]() -> std::pair<bool, std::string> {
        Nfa left = compile_regex("(a|b)*", ab);
        if (!analyze(left).pt) return {false, "(a|b)* must be PT"};
        Nfa cat = concat(left, word_automaton("a", ab));
        auto eq = equivalent(cat, compile_regex("(a|b)*a", ab));
        if (!eq.equivalent) return {false, "difference: " + eq.witness->word};
        auto rep = analyze(cat);
        if (rep.pt || rep.r_trivial) return {false, "(a|b)*a reported R-trivial"};
        return {true, ""};
    });

    add("residual-ac-identity", 0, [&]() -> std::pair<bool, std::string> {
        Nfa input = compile_regex("ac(a|b)*", abc);
        if (!analyze(input).pt) return {false, "ac(a|b)* must be PT"};
        Nfa residual = scattered_residual(input, "c");
        auto eq = equivalent(residual, compile_regex("a(a|b)*", abc));
        if (!eq.equivalent) return {false, "difference: " + eq.witness->word};
        if (analyze(residual).pt) return {false, "a(a|b)* reported PT"};
        return {true, ""};
    });

    add("disjoint-shuffle-erase-identity", 0, [&]() -> std::pair<bool, std::string> {
        Nfa just_a = word_automaton("a", ab);
        Nfa just_b = word_automaton("b", ab);
        Nfa shuf = shuffle(just_a, just_b);
        Nfa via_morphisms = boolean(BoolOp::Intersection, erase_inverse(just_a, ShareSet("b")),
                                    erase_inverse(just_b, ShareSet("a")));
        auto eq = equivalent(shuf, via_morphisms);
        if (!eq.equivalent) return {false, "difference: " + eq.witness->word};
        std::vector<std::string> both = {"ab", "ba"};
        auto eq2 = equivalent(shuf, finite_language_automaton(both, ab));
        if (!eq2.equivalent) return {false, "shuffle is not {ab, ba}: " + eq2.witness->word};
        return {true, ""};
    });

    add("h-ambient-footnote", 0, [&]() -> std::pair<bool, std::string> {
        auto narrow = piecewise_complexity(compile_regex("(a|b)*", ab), profile_cap);
        auto wide = piecewise_complexity(compile_regex("(a|b)*", abc), profile_cap);
        if (narrow.value != 0 || wide.value != 1) {
            return {false, "h over {a,b} = " + std::to_string(narrow.value.value_or(-1)) +
                               ", over {a,b,c} = " + std::to_string(wide.value.value_or(-1))};
        }
        return {true, ""};
    });

    add("h-lu-equals-length", 0, [&]() -> std::pair<bool, std::string> {
        std::vector<std::string> words = {""};
        for (int len = 1; len <= 4; ++len) {
            std::vector<std::string> next;
            for (const std::string& w : words) {
                if (static_cast<int>(w.size()) == len - 1) {
                    next.push_back(w + "a");
                    next.push_back(w + "b");
                }
            }
            for (const std::string& w : next) {
                auto h = piecewise_complexity(filter_automaton(w, ab), profile_cap);
                if (h.value != static_cast<int>(w.size())) {
                    return {false, "h(L_" + w + ") = " + std::to_string(h.value.value_or(-1))};
                }
            }
            words.insert(words.end(), next.begin(), next.end());
        }
        return {true, "30 filters"};
    });

    add("h-ufamily", 0, [&]() -> std::pair<bool, std::string> {
        for (int n = 1; n <= 2; ++n) {
            Alphabet letters(std::string("ab").substr(0, static_cast<std::size_t>(n)));
            for (int lambda = 1; lambda <= 3; ++lambda) {
                std::string u = u_family(n, lambda);
                auto h = piecewise_complexity(word_automaton(u, letters), profile_cap);
                if (h.value != n * lambda + 1) {
                    return {false, "h({U_" + std::to_string(n) + "}) at lambda=" +
                                       std::to_string(lambda) + " = " +
                                       std::to_string(h.value.value_or(-1))};
                }
            }
        }
        return {true, ""};
    });

    add("h-lufamily-blowup", 0, [&]() -> std::pair<bool, std::string> {
        const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
        for (auto [n, lambda] : cases) {
            Alphabet letters(std::string("ab").substr(0, static_cast<std::size_t>(n)));
            std::string u = u_family(n, lambda);
            Nfa ideal = upward_closure(word_automaton(u, letters));
            auto eq = equivalent(ideal, filter_automaton(u, letters).to_nfa());
            if (!eq.equivalent) return {false, "upward closure of {U_n} is not L_{U_n}"};
            auto h = piecewise_complexity(ideal, profile_cap);
            int expected = 1;
            for (int i = 0; i < n; ++i) expected *= lambda + 1;
            expected -= 1;
            if (h.value != expected) {
                return {false, "h(L_{U_" + std::to_string(n) + "}) at lambda=" +
                                   std::to_string(lambda) + " = " +
                                   std::to_string(h.value.value_or(-1)) + ", expected " +
                                   std::to_string(expected)};
            }
        }
        return {true, "gap reaches 8 vs 5 at n=2, lambda=2"};
    });

    add("h-finite-max", 0, [&]() -> std::pair<bool, std::string> {
        std::vector<std::string> aa = {"aa"};
        if (h_finite(aa, Alphabet("a"), profile_cap) != 3) return {false, "h({aa}) != 3"};
        std::vector<std::string> none;
        if (h_finite(none, ab, profile_cap) != 0) return {false, "h(empty language) != 0"};
        std::vector<std::string> pair = {"a", "ab"};
        int lhs = h_finite(pair, ab, profile_cap);
        int ha = *piecewise_complexity(word_automaton("a", ab), profile_cap).value;
        int hab = *piecewise_complexity(word_automaton("ab", ab), profile_cap).value;
        if (lhs != std::max(ha, hab)) return {false, "h({a, ab}) != max of members"};
        return {true, ""};
    });

    add("word-shuffle-bound-words", 0x517EED5EEDULL, [&]() -> std::pair<bool, std::string> {
        std::vector<std::string> single = {"aa"};
        if (word_shuffle_bound(single, Alphabet("a")) != 3) return {false, "bound({aa}) != 3"};
        if (h_finite(single, Alphabet("a"), profile_cap) != 3) return {false, "h({aa}) != 3"};
        std::vector<std::string> tight_pair = {"bab", "aba"};
        if (word_shuffle_bound(tight_pair, ab) != 4) return {false, "bound({bab, aba}) != 4"};
        SplitMix64 rng(0x517EED5EEDULL);
        for (int trial = 0; trial < 50; ++trial) {
            Alphabet letters = hd::random_alphabet(rng, 2);
            int count = 1 + rng.below_int(3);
            std::vector<std::string> words;
            Nfa shuf = word_automaton("", letters);
            for (int i = 0; i < count; ++i) {
                words.push_back(hd::random_word(rng, letters, 3));
                shuf = shuffle(shuf, word_automaton(words.back(), letters));
            }
            auto h = piecewise_complexity(shuf, profile_cap);
            if (!h.finite() || *h.value > word_shuffle_bound(words, letters)) {
                return {false, "h above the letter-count bound for trial " +
                                   std::to_string(trial)};
            }
        }
        return {true, "50 random word lists"};
    });

    add("filters-shuffle-sum", 0, [&]() -> std::pair<bool, std::string> {
        std::vector<std::string> words = {""};
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i].size() < 3) {
                words.push_back(words[i] + "a");
                words.push_back(words[i] + "b");
            }
        }
        for (const std::string& u : words) {
            for (const std::string& v : words) {
                Nfa shuf = shuffle(filter_automaton(u, ab).to_nfa(),
                                   filter_automaton(v, ab).to_nfa());
                auto h = piecewise_complexity(shuf, profile_cap);
                if (!h.finite() || *h.value > static_cast<int>(u.size() + v.size())) {
                    return {false, "h(L_" + u + " shuffle L_" + v + ") above |u|+|v|"};
                }
            }
        }
        return {true, "all |u|,|v| <= 3 over {a,b}"};
    });

    add("filters-anm-exact", 0, [&]() -> std::pair<bool, std::string> {
        for (int n = 1; n <= 5; ++n) {
            for (int m = 1; n + m <= 6; ++m) {
                std::string un(static_cast<std::size_t>(n), 'a');
                std::string um(static_cast<std::size_t>(m), 'a');
                Nfa shuf = shuffle(filter_automaton(un, ab).to_nfa(),
                                   filter_automaton(um, ab).to_nfa());
                auto eq = equivalent(shuf, filter_automaton(un + um, ab).to_nfa());
                if (!eq.equivalent) return {false, "L_a^n shuffle L_a^m != L_a^(n+m)"};
                auto h = piecewise_complexity(shuf, profile_cap);
                if (h.value != n + m) {
                    return {false, "h at n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                       " is " + std::to_string(h.value.value_or(-1))};
                }
            }
        }
        return {true, ""};
    });

    add("disjoint-alpha-max", 0, [&]() -> std::pair<bool, std::string> {
        const Alphabet just_a("a"), just_b("b");
        const char* left[] = {"a*", "~", "a", "aa*", "a|aa"};
        const char* right[] = {"b*", "b", "bb", "bbb*"};
        for (const char* lx : left) {
            for (const char* rx : right) {
                Nfa l = compile_regex(lx, just_a);
                Nfa r = compile_regex(rx, just_b);
                int hl = *piecewise_complexity(l, profile_cap).value;
                int hr = *piecewise_complexity(r, profile_cap).value;
                if (hl > 3 || hr > 3) return {false, "operand complexity above 3"};
                Nfa shuf = shuffle(extend_alphabet(l, ab), extend_alphabet(r, ab));
                auto h = piecewise_complexity(shuf, profile_cap);
                if (h.value != std::max(hl, hr)) {
                    return {false, std::string("max identity fails for ") + lx + " and " + rx +
                                       ": h=" + std::to_string(h.value.value_or(-1)) +
                                       " vs max(" + std::to_string(hl) + ", " +
                                       std::to_string(hr) + ")"};
                }
            }
        }
        return {true, "20 pairs"};
    });

    add("tight-bound-n2-lambda1", 0, [&]() -> std::pair<bool, std::string> {
        std::string base = u_family(2, 1);  // aba
        std::string u1 = circular_rename(base, 1, ab);
        std::string u2 = circular_rename(base, 2, ab);
        int h1 = *piecewise_complexity(word_automaton(u1, ab), profile_cap).value;
        int h2 = *piecewise_complexity(word_automaton(u2, ab), profile_cap).value;
        if (h1 != 3 || h2 != 3) return {false, "singleton complexities are not 3"};
        Nfa shuf = shuffle(word_automaton(u1, ab), word_automaton(u2, ab));
        auto h = piecewise_complexity(shuf, profile_cap);
        if (h.value != 4) return {false, "h = " + std::to_string(h.value.value_or(-1))};
        if (!accepts(shuf, "ababab")) return {false, "(ab)^3 must be a member"};
        if (accepts(shuf, "abababa")) return {false, "(ab)^3 a must not be a member"};
        if (!sim_k("ababab", "abababa", 3)) return {false, "the pair must be ~_3-equivalent"};
        return {true, "h=4, member (ab)^3 vs non-member (ab)^3a"};
    });

    add("h-consistency-random", 0xC0115157ULL, [&]() -> std::pair<bool, std::string> {
        SplitMix64 rng(0xC0115157ULL);
        RandomConfig cfg;
        for (int trial = 0; trial < 20; ++trial) {
            Alphabet letters = hd::random_alphabet(rng, 2);
            Nfa l = hd::random_pt_language(rng, letters, cfg);
            auto h = piecewise_complexity(l, profile_cap);
            if (!h.finite()) return {false, "filter combination not PT"};
            Dfa d = minimal_dfa(l);
            if (!is_k_closed(d, *h.value, profile_cap).closed) {
                return {false, "language not closed at its own complexity"};
            }
            if (*h.value >= 1) {
                auto below = is_k_closed(d, *h.value - 1, profile_cap);
                if (below.closed) return {false, "closed below the reported complexity"};
                const Witness& w = *below.violation;
                if (!sim_k(w.word, w.other_word, *h.value - 1) || !accepts(l, w.word) ||
                    accepts(l, w.other_word)) {
                    return {false, "closure violation witness does not replay"};
                }
                if (!h.violation || *h.violation != *below.violation) {
                    return {false, "result violation is not the k-1 refutation"};
                }
            }
        }
        return {true, "20 random PT languages"};
    });

    add("closure-enum-oracle", 0x0DDC0FFEEULL, [&]() -> std::pair<bool, std::string> {
        SplitMix64 rng(0x0DDC0FFEEULL);
        const Alphabet letters("ab");
        int checked = 0;
        for (int trial = 0; trial < 40 && checked < 10; ++trial) {
            Dfa d = minimize(hd::random_acyclic_complete_dfa(rng, letters, 5));
            int dp = depth(d);
            if (dp > 4) continue;
            ++checked;
            int max_len = 2 * dp + 2;
            for (int k = 0; k <= dp; ++k) {
                // group all words up to the length bound by profile and look
                // for a mixed-membership group
                std::map<std::vector<std::string>, std::pair<bool, bool>> groups;
                std::vector<std::string> frontier = {""};
                bool refuted = false;
                for (int len = 0; len <= max_len && !refuted; ++len) {
                    std::vector<std::string> next;
                    for (const std::string& w : frontier) {
                        auto& flags = groups[profile(w, k).maximal_elements()];
                        if (d.accepts_word(w)) flags.first = true;
                        else flags.second = true;
                        if (flags.first && flags.second) refuted = true;
                        if (static_cast<int>(w.size()) == len) {
                            next.push_back(w + "a");
                            next.push_back(w + "b");
                        }
                    }
                    frontier = std::move(next);
                }
                bool closed = is_k_closed(d, k, profile_cap).closed;
                if (closed == refuted) {
                    return {false, "enumeration disagrees at depth " + std::to_string(dp) +
                                       ", k=" + std::to_string(k)};
                }
            }
        }
        return {true, std::to_string(checked) + " minimal DFAs"};
    });

    add("dp-growth-observation", 0, [&]() -> std::pair<bool, std::string> {
        // measured only; no bound is asserted for dp(L shuffle w) in |w|
        std::string measured;
        Nfa base = filter_automaton("ab", ab).to_nfa();
        for (int i = 0; i <= 3; ++i) {
            Nfa shuf = shuffle(base, word_automaton(std::string(static_cast<std::size_t>(i), 'a'), ab));
            int dp = depth(minimal_dfa(shuf));
            if (!measured.empty()) measured += ",";
            measured += std::to_string(dp);
        }
        return {true, "dp(L_ab shuffle a^i) for i=0..3: " + measured};
    });

    return out;
}

/// Seeded randomized suites. Trials draw their own sub-seed from the master
/// seed, so any subset can be replayed; results are ordered by trial index.
inline std::vector<CheckResult> run_random(const std::string& suite, int trials,
                                           std::uint64_t seed, const RandomConfig& cfg = {}) {
    namespace hd = harness_detail;
    if (trials < 1) throw FormatError("trials must be at least 1");

    std::vector<std::uint64_t> trial_seeds;
    {
        SplitMix64 seeder(seed);
        for (int i = 0; i < trials; ++i) trial_seeds.push_back(seeder.fork_seed());
    }

    auto trial_body = [&](const std::string& kind,
                          SplitMix64& rng) -> std::pair<bool, std::string> {
        if (kind == "lemma-P-acyclic") {
            Alphabet letters = hd::random_alphabet(rng, cfg.max_alphabet);
            Dfa d = hd::random_acyclic_complete_dfa(rng, letters, cfg.max_states);
            if (!is_acyclic(d).acyclic) return {false, "generator produced a cyclic DFA"};
            std::string w = hd::random_word(rng, letters, cfg.max_word_len);
            for (unsigned mask = 0; mask < (1u << letters.size()); ++mask) {
                ShareSet share = hd::subset_by_mask(letters, mask);
                Dfa power = determinize(infiltrate_word(d, w, share));
                auto acyclic = is_acyclic(power);
                if (!acyclic.acyclic) {
                    return {false, "powerset cycle '" + acyclic.witness->word + "' with w=" + w +
                                       " C=" + share.letters()};
                }
            }
            return {true, ""};
        }

        Alphabet letters = hd::random_alphabet(rng, cfg.max_alphabet);
        Nfa l = hd::random_pt_language(rng, letters, cfg);
        if (!analyze(l).pt) return {false, "generated left operand is not PT"};
        std::vector<std::string> words = hd::random_word_set(rng, letters, cfg);
        Nfa finite = finite_language_automaton(words, letters);

        Nfa right;
        if (kind == "thm1-finite") {
            right = finite;
        } else if (kind == "thm1-cofinite") {
            right = complement(finite);
        } else if (kind == "thm1-ideal") {
            right = upward_closure(finite);
        } else {
            throw FormatError("unknown suite '" + kind + "'");
        }

        unsigned mirror_mask = static_cast<unsigned>(rng.below(1u << letters.size()));
        for (unsigned mask = 0; mask < (1u << letters.size()); ++mask) {
            ShareSet share = hd::subset_by_mask(letters, mask);
            Nfa result = infiltrate(l, right, share);
            auto rep = analyze(result);
            if (!rep.pt) {
                return {false, "infiltration not PT with C=" + share.letters() +
                                   (rep.witness ? ", cycle " + rep.witness->word : "")};
            }
            if (kind == "thm1-ideal" && !is_shuffle_ideal(result)) {
                return {false, "infiltration of a shuffle ideal is not an ideal, C=" +
                                   share.letters()};
            }
            if (kind == "thm1-finite" && mask == mirror_mask) {
                auto hom = equivalent(mirror(result), infiltrate(mirror(l), mirror(right), share));
                if (!hom.equivalent) {
                    return {false, "mirror homomorphism breaks: " + hom.witness->word};
                }
            }
        }
        return {true, ""};
    };

    std::vector<CheckResult> out;
    for (int i = 0; i < trials; ++i) {
        out.push_back(hd::run_check(
            suite + "/trial-" + hd::pad_index(i), trial_seeds[static_cast<std::size_t>(i)],
            [&]() -> std::pair<bool, std::string> {
                SplitMix64 rng(trial_seeds[static_cast<std::size_t>(i)]);
                if (suite == "bounds") {
                    // word-shuffle bound
                    Alphabet letters = hd::random_alphabet(rng, 2);
                    int count = 1 + rng.below_int(3);
                    std::vector<std::string> words;
                    Nfa shuf = word_automaton("", letters);
                    for (int j = 0; j < count; ++j) {
                        words.push_back(hd::random_word(rng, letters, 3));
                        shuf = shuffle(shuf, word_automaton(words.back(), letters));
                    }
                    auto h = piecewise_complexity(shuf, cfg.profile_cap);
                    if (!h.finite() || *h.value > word_shuffle_bound(words, letters)) {
                        return {false, "word-shuffle bound violated"};
                    }
                    // filter sum bound
                    const Alphabet ab("ab");
                    std::string u = hd::random_word(rng, ab, 3);
                    std::string v = hd::random_word(rng, ab, 3);
                    Nfa filters = shuffle(filter_automaton(u, ab).to_nfa(),
                                          filter_automaton(v, ab).to_nfa());
                    auto hf = piecewise_complexity(filters, cfg.profile_cap);
                    if (!hf.finite() || *hf.value > static_cast<int>(u.size() + v.size())) {
                        return {false, "filter shuffle bound violated for u=" + u + " v=" + v};
                    }
                    // disjoint-alphabet max identity on single-letter operands
                    auto random_unary = [&](char letter) {
                        Alphabet one(std::string(1, letter));
                        Nfa acc = empty_language_automaton(one);
                        bool nonempty = false;
                        for (int piece = 0; piece < 4; ++piece) {
                            if (!rng.coin()) continue;
                            nonempty = true;
                            Nfa part = piece < 3
                                           ? word_automaton(std::string(static_cast<std::size_t>(piece), letter), one)
                                           : compile_regex(std::string(3, letter) +
                                                               std::string(1, letter) + "*",
                                                           one);
                            acc = boolean(BoolOp::Union, acc, part);
                        }
                        if (!nonempty) acc = word_automaton("", one);
                        return acc;
                    };
                    Nfa l1 = random_unary('a');
                    Nfa l2 = random_unary('b');
                    int h1 = *piecewise_complexity(l1, cfg.profile_cap).value;
                    int h2 = *piecewise_complexity(l2, cfg.profile_cap).value;
                    Nfa mixed = shuffle(extend_alphabet(l1, ab), extend_alphabet(l2, ab));
                    auto hm = piecewise_complexity(mixed, cfg.profile_cap);
                    if (hm.value != std::max(h1, h2)) {
                        return {false, "disjoint-alphabet max identity violated"};
                    }
                    return {true, ""};
                }
                return trial_body(suite, rng);
            }));
    }
    return out;
}

inline nlohmann::ordered_json check_to_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["detail"] = r.detail;
    j["seed"] = r.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline void write_jsonl(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results) out << check_to_json(r).dump() << "\n";
}

/// 0 when everything passed, 1 on any failure, 3 when the only problems were
/// resource skips.
inline int exit_code_for(const std::vector<CheckResult>& results) {
    bool skipped = false;
    for (const CheckResult& r : results) {
        if (r.status == CheckResult::Status::Fail) return 1;
        if (r.status == CheckResult::Status::SkippedResource) skipped = true;
    }
    return skipped ? 3 : 0;
}

}  // namespace ptkit
