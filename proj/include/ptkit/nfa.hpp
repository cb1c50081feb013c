#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptkit/alphabet.hpp"
#include "ptkit/errors.hpp"

namespace ptkit {

struct Transition {
    int from = 0;
    char letter = '\0';
    int to = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton without epsilon transitions; the
/// exchange format every operation consumes and produces. States are dense
/// ids 0..state_count-1 and the value is immutable once built.
struct Nfa {
    Alphabet alphabet;
    int state_count = 0;
    std::vector<int> initial;
    std::vector<int> accepting;
    std::vector<Transition> transitions;

    void normalize() {
        auto dedupe = [](auto& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        dedupe(initial);
        dedupe(accepting);
        dedupe(transitions);
    }

    void validate() const {
        if (alphabet.empty()) throw FormatError("automaton has an empty alphabet");
        if (state_count < 0) throw FormatError("negative state count");
        auto check_state = [&](int q, const char* what) {
            if (q < 0 || q >= state_count) {
                throw FormatError(std::string(what) + " state " + std::to_string(q) +
                                  " out of range [0, " + std::to_string(state_count) + ")");
            }
        };
        for (int q : initial) check_state(q, "initial");
        for (int q : accepting) check_state(q, "accepting");
        for (const Transition& t : transitions) {
            check_state(t.from, "transition source");
            check_state(t.to, "transition target");
            if (!alphabet.contains(t.letter)) {
                throw FormatError(std::string("transition letter '") + t.letter +
                                  "' outside the alphabet");
            }
        }
    }

    bool is_initial(int q) const {
        return std::binary_search(initial.begin(), initial.end(), q);
    }
    bool is_accepting(int q) const {
        return std::binary_search(accepting.begin(), accepting.end(), q);
    }

    bool operator==(const Nfa&) const = default;
};

/// Complete deterministic automaton: one initial state and exactly one target
/// per (state, letter). delta is row-major: state * |alphabet| + letter index.
struct Dfa {
    Alphabet alphabet;
    int state_count = 0;
    int initial = 0;
    std::vector<bool> accepting;
    std::vector<int> delta;

    int step(int q, int letter_index) const {
        return delta[static_cast<std::size_t>(q) * alphabet.size() + letter_index];
    }

    int run(std::string_view word) const {
        int q = initial;
        for (char c : word) {
            int a = alphabet.index_of(c);
            if (a < 0) {
                throw AlphabetMismatchError(std::string("letter '") + c +
                                            "' outside the alphabet");
            }
            q = step(q, a);
        }
        return q;
    }

    bool accepts_word(std::string_view word) const { return accepting[run(word)]; }

    Nfa to_nfa() const {
        Nfa n;
        n.alphabet = alphabet;
        n.state_count = state_count;
        n.initial = {initial};
        for (int q = 0; q < state_count; ++q) {
            if (accepting[q]) n.accepting.push_back(q);
            for (int a = 0; a < alphabet.size(); ++a) {
                n.transitions.push_back({q, alphabet.letter(a), step(q, a)});
            }
        }
        n.normalize();
        return n;
    }

    bool operator==(const Dfa&) const = default;
};

/// Sorted target lists per (state, letter); the adjacency view used by the
/// subset construction and the product builders.
class TransitionTable {
public:
    explicit TransitionTable(const Nfa& n)
        : letters_(n.alphabet.size()), out_(static_cast<std::size_t>(n.state_count) * letters_) {
        for (const Transition& t : n.transitions) {
            int a = n.alphabet.index_of(t.letter);
            out_[static_cast<std::size_t>(t.from) * letters_ + a].push_back(t.to);
        }
        for (auto& v : out_) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
    }

    const std::vector<int>& targets(int q, int letter_index) const {
        return out_[static_cast<std::size_t>(q) * letters_ + letter_index];
    }

private:
    int letters_;
    std::vector<std::vector<int>> out_;
};

inline bool satisfies_dfa_invariants(const Nfa& n) {
    if (n.initial.size() != 1) return false;
    if (n.state_count == 0) return false;
    std::vector<int> seen(static_cast<std::size_t>(n.state_count) * n.alphabet.size(), 0);
    for (const Transition& t : n.transitions) {
        seen[static_cast<std::size_t>(t.from) * n.alphabet.size() + n.alphabet.index_of(t.letter)]++;
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

inline std::optional<Dfa> dfa_from_nfa(const Nfa& n) {
    if (!satisfies_dfa_invariants(n)) return std::nullopt;
    Dfa d;
    d.alphabet = n.alphabet;
    d.state_count = n.state_count;
    d.initial = n.initial.front();
    d.accepting.assign(n.state_count, false);
    for (int q : n.accepting) d.accepting[q] = true;
    d.delta.assign(static_cast<std::size_t>(n.state_count) * n.alphabet.size(), 0);
    for (const Transition& t : n.transitions) {
        d.delta[static_cast<std::size_t>(t.from) * n.alphabet.size() +
                n.alphabet.index_of(t.letter)] = t.to;
    }
    return d;
}

/// Direct simulation; throws on letters outside the alphabet.
inline bool accepts(const Nfa& n, std::string_view word) {
    TransitionTable table(n);
    std::vector<char> current(n.state_count, 0), next;
    for (int q : n.initial) current[q] = 1;
    for (char c : word) {
        int a = n.alphabet.index_of(c);
        if (a < 0) {
            throw AlphabetMismatchError(std::string("letter '") + c +
                                        "' outside the alphabet");
        }
        next.assign(n.state_count, 0);
        for (int q = 0; q < n.state_count; ++q) {
            if (!current[q]) continue;
            for (int t : table.targets(q, a)) next[t] = 1;
        }
        current.swap(next);
    }
    return std::any_of(n.accepting.begin(), n.accepting.end(),
                       [&](int q) { return current[q] != 0; });
}

/// Chain automaton accepting exactly {w}.
inline Nfa word_automaton(std::string_view w, const Alphabet& alphabet) {
    if (!alphabet.contains_all(w)) {
        throw AlphabetMismatchError("word '" + std::string(w) + "' uses letters outside the alphabet");
    }
    Nfa n;
    n.alphabet = alphabet;
    n.state_count = static_cast<int>(w.size()) + 1;
    n.initial = {0};
    n.accepting = {static_cast<int>(w.size())};
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        n.transitions.push_back({i, w[static_cast<std::size_t>(i)], i + 1});
    }
    return n;
}

/// Union of word chains; accepts exactly the given finite set.
inline Nfa finite_language_automaton(std::span<const std::string> words,
                                     const Alphabet& alphabet) {
    Nfa n;
    n.alphabet = alphabet;
    n.state_count = 0;
    for (const std::string& w : words) {
        Nfa chain = word_automaton(w, alphabet);
        int off = n.state_count;
        n.state_count += chain.state_count;
        n.initial.push_back(off);
        for (int q : chain.accepting) n.accepting.push_back(q + off);
        for (const Transition& t : chain.transitions) {
            n.transitions.push_back({t.from + off, t.letter, t.to + off});
        }
    }
    if (words.empty()) {
        // no words: a single rejecting state keeps the automaton well-formed
        n.state_count = 1;
        n.initial = {0};
    }
    n.normalize();
    return n;
}

inline Nfa empty_language_automaton(const Alphabet& alphabet) {
    return finite_language_automaton({}, alphabet);
}

/// Same structure over a wider alphabet; the accepted language is unchanged.
inline Nfa extend_alphabet(const Nfa& n, const Alphabet& wider) {
    if (!n.alphabet.is_subset_of(wider)) {
        throw AlphabetMismatchError("extended alphabet must contain the original one");
    }
    Nfa out = n;
    out.alphabet = wider;
    return out;
}

}  // namespace ptkit
