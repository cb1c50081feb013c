#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ptkit/alphabet.hpp"
#include "ptkit/pt.hpp"
#include "ptkit/subwords.hpp"
#include "ptkit/witness.hpp"

namespace ptkit {

inline constexpr std::size_t kDefaultProfilePairCap = 2'000'000;

struct ClosureResult {
    bool closed = false;
    std::optional<Witness> violation;  // (u in L, v not in L, k) with u ~_k v
};

namespace detail {

// Shortlex rank vocabulary of the words of length <= k over s letters. The
// subword set of a word is a bitset over this vocabulary; appending a letter
// is a linear pass over the set bits. Equality of bitsets is equality of
// ~_k classes, same as for the antichain representation, but the fixed-width
// form keeps the closure product fast at desk scale.
struct ProfileVocabulary {
    int s = 1;
    int k = 0;
    std::vector<std::uint64_t> offset;  // offset[len] = number of strictly shorter words
    std::size_t words = 0;              // bitset width in 64-bit words
    std::vector<std::uint8_t> length_of;

    ProfileVocabulary(int alphabet_size, int bound, std::size_t cap)
        : s(alphabet_size), k(bound) {
        offset.resize(static_cast<std::size_t>(k) + 2);
        offset[0] = 0;
        std::uint64_t level = 1;
        for (int len = 0; len <= k; ++len) {
            offset[static_cast<std::size_t>(len) + 1] = offset[static_cast<std::size_t>(len)] + level;
            if (offset[static_cast<std::size_t>(len) + 1] > (1u << 20)) {
                throw ResourceLimitError(
                    "subword vocabulary for k=" + std::to_string(k) + " over " +
                        std::to_string(s) + " letters is beyond desk scale",
                    cap);
            }
            level *= static_cast<std::uint64_t>(s);
        }
        std::uint64_t total = offset[static_cast<std::size_t>(k) + 1];
        words = static_cast<std::size_t>((total + 63) / 64);
        length_of.resize(static_cast<std::size_t>(total));
        for (int len = 0; len <= k; ++len) {
            for (std::uint64_t r = offset[static_cast<std::size_t>(len)];
                 r < offset[static_cast<std::size_t>(len) + 1]; ++r) {
                length_of[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(len);
            }
        }
    }

    // bitset of the subwords of w-then-a given the bitset of w
    std::vector<std::uint64_t> append(const std::vector<std::uint64_t>& set, int letter) const {
        std::vector<std::uint64_t> out = set;
        for (std::size_t word_index = 0; word_index < set.size(); ++word_index) {
            std::uint64_t bits = set[word_index];
            while (bits != 0) {
                int bit = std::countr_zero(bits);
                bits &= bits - 1;
                std::uint64_t r = word_index * 64 + static_cast<std::uint64_t>(bit);
                int len = length_of[static_cast<std::size_t>(r)];
                if (len >= k) continue;
                std::uint64_t value = r - offset[static_cast<std::size_t>(len)];
                std::uint64_t extended = offset[static_cast<std::size_t>(len) + 1] +
                                         value * static_cast<std::uint64_t>(s) +
                                         static_cast<std::uint64_t>(letter);
                out[extended / 64] |= (1ULL << (extended % 64));
            }
        }
        return out;
    }

    std::vector<std::uint64_t> epsilon_profile() const {
        std::vector<std::uint64_t> set(words, 0);
        set[0] |= 1;  // rank 0 is the empty word
        return set;
    }
};

struct ProfileSetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (std::uint64_t x : v) {
            h ^= x;
            h *= 0x100000001B3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace detail

/// Whether L(d) is a union of ~_k classes. Explores the product of d with the
/// automaton of reachable subword profiles; the language is closed under ~_k
/// exactly when no profile is reachable together with both an accepting and a
/// rejecting state of d. Throws ResourceLimitError past `cap` product pairs.
inline ClosureResult is_k_closed(const Dfa& d, int k, std::size_t cap = kDefaultProfilePairCap) {
    if (k < 0) throw FormatError("negative profile bound");
    const int letters = d.alphabet.size();
    detail::ProfileVocabulary vocab(letters, k, cap);

    // interned profile bitsets; ids in discovery order
    std::unordered_map<std::vector<std::uint64_t>, int, detail::ProfileSetHash> profile_ids;
    std::vector<const std::vector<std::uint64_t>*> profiles;
    auto intern = [&](std::vector<std::uint64_t> set) {
        auto [it, inserted] = profile_ids.try_emplace(std::move(set),
                                                      static_cast<int>(profiles.size()));
        if (inserted) profiles.push_back(&it->first);
        return it->second;
    };

    std::vector<int> profile_step;  // pid * letters + a -> pid, lazily filled
    auto step_profile = [&](int pid, int a) {
        if (profile_step.size() < profiles.size() * static_cast<std::size_t>(letters)) {
            profile_step.resize(profiles.size() * static_cast<std::size_t>(letters), -1);
        }
        int& slot = profile_step[static_cast<std::size_t>(pid) * letters + static_cast<std::size_t>(a)];
        if (slot < 0) {
            slot = intern(vocab.append(*profiles[static_cast<std::size_t>(pid)], a));
        }
        return slot;
    };

    struct Node {
        int pid, q, parent;
        char letter;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::uint64_t> visited;
    auto push = [&](int pid, int q, int parent, char letter) {
        std::uint64_t key = static_cast<std::uint64_t>(pid) * static_cast<std::uint64_t>(d.state_count) +
                            static_cast<std::uint64_t>(q);
        if (!visited.insert(key).second) return;
        if (nodes.size() >= cap) {
            throw ResourceLimitError("profile-state product exceeded the cap of " +
                                         std::to_string(cap) + " pairs at k=" + std::to_string(k),
                                     cap);
        }
        nodes.push_back({pid, q, parent, letter});
    };
    auto word_of = [&](int index) {
        std::string w;
        for (int j = index; nodes[static_cast<std::size_t>(j)].parent >= 0;
             j = nodes[static_cast<std::size_t>(j)].parent) {
            w.push_back(nodes[static_cast<std::size_t>(j)].letter);
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::vector<int> first_accepting, first_rejecting;
    auto ensure_status_slots = [&]() {
        if (first_accepting.size() < profiles.size()) {
            first_accepting.resize(profiles.size(), -1);
            first_rejecting.resize(profiles.size(), -1);
        }
    };

    int initial_pid = intern(vocab.epsilon_profile());
    push(initial_pid, d.initial, -1, '\0');
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Node node = nodes[i];
        ensure_status_slots();
        bool acc = d.accepting[static_cast<std::size_t>(node.q)];
        int& mine = acc ? first_accepting[static_cast<std::size_t>(node.pid)]
                        : first_rejecting[static_cast<std::size_t>(node.pid)];
        if (mine < 0) mine = static_cast<int>(i);
        int in_l = first_accepting[static_cast<std::size_t>(node.pid)];
        int out_l = first_rejecting[static_cast<std::size_t>(node.pid)];
        if (in_l >= 0 && out_l >= 0) {
            return {false, Witness::closure_violation(word_of(in_l), word_of(out_l), k)};
        }
        for (int a = 0; a < letters; ++a) {
            push(step_profile(node.pid, a), d.step(node.q, a), static_cast<int>(i),
                 d.alphabet.letter(a));
        }
    }
    return {true, std::nullopt};
}

/// Exact piecewise complexity. value is empty when the language is not
/// piecewise-testable; otherwise it is the least k such that L is a union of
/// ~_k classes, found by ascending search bounded by the canonical DFA's
/// depth. For value >= 1 the violation field carries the refutation of k-1.
struct ComplexityResult {
    std::optional<int> value;
    int checked_bound = -1;
    std::optional<Witness> violation;

    bool finite() const noexcept { return value.has_value(); }
};

inline ComplexityResult piecewise_complexity(const Nfa& x,
                                             std::size_t cap = kDefaultProfilePairCap) {
    TrivialityReport rep = analyze(x);
    if (!rep.pt) return {};

    Dfa d = minimal_dfa(x);
    int bound = depth(d);
    std::optional<Witness> last_violation;
    for (int k = 0; k <= bound; ++k) {
        ClosureResult c = is_k_closed(d, k, cap);
        if (c.closed) {
            ComplexityResult r;
            r.value = k;
            r.checked_bound = bound;
            r.violation = std::move(last_violation);
            return r;
        }
        last_violation = std::move(c.violation);
    }
    throw std::logic_error(
        "no k up to the depth bound closed a piecewise-testable language; "
        "this contradicts h(L) <= dp(L)");
}

inline ComplexityResult piecewise_complexity(const Dfa& d,
                                             std::size_t cap = kDefaultProfilePairCap) {
    return piecewise_complexity(d.to_nfa(), cap);
}

/// Complexity of a finite language: the maximum over its members, which is
/// also asserted against the complexity of the union automaton.
inline int h_finite(std::span<const std::string> words, const Alphabet& alphabet,
                    std::size_t cap = kDefaultProfilePairCap) {
    int best = 0;
    for (const std::string& w : words) {
        ComplexityResult r = piecewise_complexity(word_automaton(w, alphabet), cap);
        best = std::max(best, *r.value);
    }
    ComplexityResult whole = piecewise_complexity(finite_language_automaton(words, alphabet), cap);
    if (!whole.finite() || *whole.value != best) {
        throw std::logic_error("finite-language complexity disagrees with the member maximum");
    }
    return best;
}

/// Upper bound on h(u_1 shuffle ... shuffle u_m): one plus the largest total
/// number of occurrences of a single letter across the words.
inline int word_shuffle_bound(std::span<const std::string> words, const Alphabet& alphabet) {
    int best = 0;
    for (int a = 0; a < alphabet.size(); ++a) {
        int total = 0;
        for (const std::string& w : words) {
            total += static_cast<int>(std::count(w.begin(), w.end(), alphabet.letter(a)));
        }
        best = std::max(best, total);
    }
    return 1 + best;
}

/// The blowup witness family over letters a, b, c, ...: U_0 is empty and
/// U_{i+1} = (U_i a_{i+1})^lambda U_i, so |U_n| = (lambda+1)^n - 1.
inline std::string u_family(int n, int lambda) {
    if (n < 0 || n > 26 || lambda < 0) {
        throw FormatError("u_family expects 0 <= n <= 26 and lambda >= 0");
    }
    std::string u;
    for (int i = 0; i < n; ++i) {
        char a = static_cast<char>('a' + i);
        std::string next;
        for (int j = 0; j < lambda; ++j) {
            next += u;
            next.push_back(a);
        }
        next += u;
        u = std::move(next);
    }
    return u;
}

/// Shifts every letter by `shift` positions along the alphabet order,
/// wrapping around.
inline std::string circular_rename(std::string_view u, int shift, const Alphabet& alphabet) {
    const int n = alphabet.size();
    std::string out;
    out.reserve(u.size());
    for (char c : u) {
        int idx = alphabet.index_of(c);
        if (idx < 0) {
            throw AlphabetMismatchError(std::string("letter '") + c + "' outside the alphabet");
        }
        out.push_back(alphabet.letter(((idx + shift) % n + n) % n));
    }
    return out;
}

}  // namespace ptkit
