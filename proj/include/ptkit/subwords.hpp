#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ptkit/alphabet.hpp"
#include "ptkit/automata.hpp"
#include "ptkit/nfa.hpp"
#include "ptkit/products.hpp"

namespace ptkit {

/// u is a scattered subword of v (greedy left-to-right matching).
inline bool is_subword(std::string_view u, std::string_view v) {
    std::size_t i = 0;
    for (char c : v) {
        if (i < u.size() && u[i] == c) ++i;
    }
    return i == u.size();
}

/// Subword exactly one letter shorter.
inline bool is_direct_subword(std::string_view u, std::string_view v) {
    return u.size() + 1 == v.size() && is_subword(u, v);
}

namespace detail {

// length-then-lexicographic, the canonical order for stored antichains
inline bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline void canonicalize_words(std::vector<std::string>& words) {
    std::sort(words.begin(), words.end(), shortlex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

// keep only words that are not strict subwords of another stored word
inline std::vector<std::string> antichain_maxima(std::vector<std::string> words) {
    canonicalize_words(words);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        bool dominated = false;
        // canonical order puts candidates of larger length after i
        for (std::size_t j = i + 1; j < words.size() && !dominated; ++j) {
            if (words[j].size() > words[i].size() && is_subword(words[i], words[j])) {
                dominated = true;
            }
        }
        if (!dominated) out.push_back(words[i]);
    }
    return out;
}

inline std::vector<std::string> one_deletions(const std::string& w) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string d = w;
        d.erase(i, 1);
        out.push_back(std::move(d));
    }
    canonicalize_words(out);
    return out;
}

// Appending letter `a` to a profiled word: the new subword set is the old one
// plus every old subword of length < k extended by `a`. On antichains the
// extendable part is covered by the maxima of length < k together with the
// one-deletions of the maxima of length exactly k.
inline std::vector<std::string> antichain_append(const std::vector<std::string>& maxima,
                                                 char a, int k) {
    if (k == 0) return maxima;
    std::vector<std::string> extendable;
    for (const std::string& m : maxima) {
        if (static_cast<int>(m.size()) < k) {
            extendable.push_back(m);
        } else {
            auto dels = one_deletions(m);
            extendable.insert(extendable.end(), dels.begin(), dels.end());
        }
    }
    extendable = antichain_maxima(std::move(extendable));
    std::vector<std::string> merged = maxima;
    for (std::string& w : extendable) {
        w.push_back(a);
        merged.push_back(std::move(w));
    }
    return antichain_maxima(std::move(merged));
}

}  // namespace detail

/// The set of subwords of length <= k of some word, stored as the antichain
/// of its maximal elements in canonical (length, lexicographic) order.
/// Profiles of two words are equal exactly when the words are ~_k-congruent.
class SubwordProfile {
public:
    explicit SubwordProfile(int k) : k_(k), maximal_{std::string()} {}

    static SubwordProfile of_word(std::string_view u, int k) {
        SubwordProfile p(k);
        for (char c : u) p.append(c);
        return p;
    }

    void append(char a) { maximal_ = detail::antichain_append(maximal_, a, k_); }

    SubwordProfile appended(char a) const {
        SubwordProfile p = *this;
        p.append(a);
        return p;
    }

    int bound() const noexcept { return k_; }
    const std::vector<std::string>& maximal_elements() const noexcept { return maximal_; }

    bool contains(std::string_view w) const {
        return std::any_of(maximal_.begin(), maximal_.end(),
                           [&](const std::string& m) { return is_subword(w, m); });
    }

    /// Every subword of length <= k, enumerated from the maxima.
    std::vector<std::string> downward_closure() const {
        std::vector<std::string> out = maximal_;
        detail::canonicalize_words(out);
        std::vector<std::string> frontier = out;
        while (!frontier.empty()) {
            std::vector<std::string> next;
            for (const std::string& w : frontier) {
                for (std::string& d : detail::one_deletions(w)) next.push_back(std::move(d));
            }
            detail::canonicalize_words(next);
            std::vector<std::string> fresh;
            for (std::string& w : next) {
                if (!std::binary_search(out.begin(), out.end(), w, detail::shortlex_less)) {
                    fresh.push_back(std::move(w));
                }
            }
            out.insert(out.end(), fresh.begin(), fresh.end());
            detail::canonicalize_words(out);
            frontier = std::move(fresh);
        }
        return out;
    }

    bool operator==(const SubwordProfile&) const = default;

private:
    int k_;
    std::vector<std::string> maximal_;
};

inline SubwordProfile profile(std::string_view u, int k) {
    return SubwordProfile::of_word(u, k);
}

/// Simon's congruence: same subwords up to length k.
inline bool sim_k(std::string_view u, std::string_view v, int k) {
    return profile(u, k) == profile(v, k);
}

/// Chain DFA of the principal filter L_u = { v | u subword of v }: state i
/// advances on u[i] and self-loops on everything else; the last state is
/// accepting and stable on the whole alphabet.
inline Dfa filter_automaton(std::string_view u, const Alphabet& alphabet) {
    if (!alphabet.contains_all(u)) {
        throw AlphabetMismatchError("word '" + std::string(u) + "' uses letters outside the alphabet");
    }
    Dfa d;
    d.alphabet = alphabet;
    d.state_count = static_cast<int>(u.size()) + 1;
    d.initial = 0;
    d.accepting.assign(static_cast<std::size_t>(d.state_count), false);
    d.accepting[u.size()] = true;
    d.delta.resize(static_cast<std::size_t>(d.state_count) * alphabet.size());
    for (int q = 0; q < d.state_count; ++q) {
        for (int a = 0; a < alphabet.size(); ++a) {
            bool advance = q < static_cast<int>(u.size()) &&
                           u[static_cast<std::size_t>(q)] == alphabet.letter(a);
            d.delta[static_cast<std::size_t>(q) * alphabet.size() + static_cast<std::size_t>(a)] =
                advance ? q + 1 : q;
        }
    }
    return d;
}

/// Shuffle ideals are exactly the languages equal to their upward closure.
inline bool is_shuffle_ideal(const Nfa& x) {
    return equivalent(x, upward_closure(x)).equivalent;
}

}  // namespace ptkit
