#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptkit/automata.hpp"
#include "ptkit/nfa.hpp"

namespace ptkit {

namespace detail {

// Letter transitions plus silent edges; internal only, the public Nfa stays
// epsilon-free. eliminate() folds the silent edges into letter moves and
// trims unreachable states.
struct EpsNfa {
    Alphabet alphabet;
    int state_count = 0;
    std::vector<int> initial;
    std::vector<int> accepting;
    std::vector<Transition> letter_transitions;
    std::vector<std::pair<int, int>> silent;

    Nfa eliminate() const {
        std::vector<std::vector<int>> eps(static_cast<std::size_t>(state_count));
        for (auto [p, q] : silent) eps[static_cast<std::size_t>(p)].push_back(q);

        // forward closure of each state over silent edges
        std::vector<std::vector<int>> closure(static_cast<std::size_t>(state_count));
        for (int q = 0; q < state_count; ++q) {
            std::vector<char> mark(static_cast<std::size_t>(state_count), 0);
            std::vector<int> stack{q};
            mark[static_cast<std::size_t>(q)] = 1;
            while (!stack.empty()) {
                int p = stack.back();
                stack.pop_back();
                closure[static_cast<std::size_t>(q)].push_back(p);
                for (int t : eps[static_cast<std::size_t>(p)]) {
                    if (!mark[static_cast<std::size_t>(t)]) {
                        mark[static_cast<std::size_t>(t)] = 1;
                        stack.push_back(t);
                    }
                }
            }
            std::sort(closure[static_cast<std::size_t>(q)].begin(),
                      closure[static_cast<std::size_t>(q)].end());
        }

        std::vector<std::vector<Transition>> by_source(static_cast<std::size_t>(state_count));
        for (const Transition& t : letter_transitions) {
            by_source[static_cast<std::size_t>(t.from)].push_back(t);
        }

        Nfa out;
        out.alphabet = alphabet;
        out.state_count = state_count;
        out.initial = initial;
        for (int q = 0; q < state_count; ++q) {
            bool acc = false;
            for (int p : closure[static_cast<std::size_t>(q)]) {
                if (std::binary_search(accepting.begin(), accepting.end(), p)) acc = true;
                for (const Transition& t : by_source[static_cast<std::size_t>(p)]) {
                    out.transitions.push_back({q, t.letter, t.to});
                }
            }
            if (acc) out.accepting.push_back(q);
        }
        out.normalize();
        return trim(out);
    }
};

}  // namespace detail

/// Infiltration product L(x) up_C L(y): pair automaton where a letter moves
/// the left operand, the right operand, or (for letters of C) both at once.
/// Pairs are generated lazily from the initial pairs.
inline Nfa infiltrate(const Nfa& x, const Nfa& y, const ShareSet& share) {
    detail::require_same_alphabet(x, y);
    share.require_within(x.alphabet, "share set");
    x.validate();
    y.validate();

    TransitionTable tx(x), ty(y);
    const int letters = x.alphabet.size();

    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](std::pair<int, int> p) {
        auto [it, inserted] = ids.try_emplace(p, static_cast<int>(pairs.size()));
        if (inserted) pairs.push_back(p);
        return it->second;
    };

    Nfa out;
    out.alphabet = x.alphabet;
    for (int p : x.initial) {
        for (int q : y.initial) out.initial.push_back(intern({p, q}));
    }
    for (int s = 0; s < static_cast<int>(pairs.size()); ++s) {
        auto [p, q] = pairs[static_cast<std::size_t>(s)];
        for (int a = 0; a < letters; ++a) {
            char c = x.alphabet.letter(a);
            for (int pt : tx.targets(p, a)) {
                out.transitions.push_back({s, c, intern({pt, q})});
            }
            for (int qt : ty.targets(q, a)) {
                out.transitions.push_back({s, c, intern({p, qt})});
            }
            if (share.contains(c)) {
                for (int pt : tx.targets(p, a)) {
                    for (int qt : ty.targets(q, a)) {
                        out.transitions.push_back({s, c, intern({pt, qt})});
                    }
                }
            }
        }
    }
    out.state_count = static_cast<int>(pairs.size());
    for (int s = 0; s < out.state_count; ++s) {
        auto [p, q] = pairs[static_cast<std::size_t>(s)];
        if (x.is_accepting(p) && y.is_accepting(q)) out.accepting.push_back(s);
    }
    out.normalize();
    return out;
}

inline Nfa shuffle(const Nfa& x, const Nfa& y) {
    return infiltrate(x, y, ShareSet::empty_set());
}

/// Word-specialized infiltration: states Q x {0..|w|}, initial (i, 0),
/// accepting F x {|w|}; on a the automaton moves the DFA component, consumes
/// the next letter of w when it matches, or does both when the letter is
/// shared. All |Q| * (|w|+1) states are materialized.
inline Nfa infiltrate_word(const Dfa& d, std::string_view w, const ShareSet& share) {
    if (!d.alphabet.contains_all(w)) {
        throw AlphabetMismatchError("word '" + std::string(w) + "' uses letters outside the alphabet");
    }
    share.require_within(d.alphabet, "share set");
    const int m = static_cast<int>(w.size());
    const int rows = m + 1;
    auto id = [&](int q, int k) { return q * rows + k; };

    Nfa out;
    out.alphabet = d.alphabet;
    out.state_count = d.state_count * rows;
    out.initial = {id(d.initial, 0)};
    for (int q = 0; q < d.state_count; ++q) {
        if (d.accepting[static_cast<std::size_t>(q)]) out.accepting.push_back(id(q, m));
    }
    for (int q = 0; q < d.state_count; ++q) {
        for (int a = 0; a < d.alphabet.size(); ++a) {
            char c = d.alphabet.letter(a);
            int qa = d.step(q, a);
            for (int k = 0; k <= m; ++k) {
                out.transitions.push_back({id(q, k), c, id(qa, k)});
                if (k < m && w[static_cast<std::size_t>(k)] == c) {
                    out.transitions.push_back({id(q, k), c, id(q, k + 1)});
                    if (share.contains(c)) {
                        out.transitions.push_back({id(q, k), c, id(qa, k + 1)});
                    }
                }
            }
        }
    }
    out.normalize();
    return out;
}

/// Epsilon-free concatenation over a disjoint sum of the operands.
inline Nfa concat(const Nfa& x, const Nfa& y) {
    detail::require_same_alphabet(x, y);
    x.validate();
    y.validate();

    bool x_has_epsilon = std::any_of(x.initial.begin(), x.initial.end(),
                                     [&](int q) { return x.is_accepting(q); });
    bool y_has_epsilon = std::any_of(y.initial.begin(), y.initial.end(),
                                     [&](int q) { return y.is_accepting(q); });

    Nfa out;
    out.alphabet = x.alphabet;
    int off = x.state_count;
    out.state_count = x.state_count + y.state_count;
    out.initial = x.initial;
    if (x_has_epsilon) {
        for (int q : y.initial) out.initial.push_back(q + off);
    }
    for (int q : y.accepting) out.accepting.push_back(q + off);
    if (y_has_epsilon) {
        for (int q : x.accepting) out.accepting.push_back(q);
    }
    out.transitions = x.transitions;
    for (const Transition& t : y.transitions) {
        out.transitions.push_back({t.from + off, t.letter, t.to + off});
    }
    // bridge: accepting states of x take over the initial moves of y
    for (const Transition& t : y.transitions) {
        if (!y.is_initial(t.from)) continue;
        for (int f : x.accepting) {
            out.transitions.push_back({f, t.letter, t.to + off});
        }
    }
    out.normalize();
    return out;
}

/// Scattered residual L(x) -/-> u: words v such that some member of L(x) is
/// an interleaving of u and v. Index layers count how much of u has been
/// consumed; consuming a letter of u is a silent move, eliminated afterwards.
inline Nfa scattered_residual(const Nfa& x, std::string_view u) {
    if (!x.alphabet.contains_all(u)) {
        throw AlphabetMismatchError("word '" + std::string(u) + "' uses letters outside the alphabet");
    }
    x.validate();
    TransitionTable table(x);
    const int m = static_cast<int>(u.size());
    const int rows = m + 1;
    auto id = [&](int q, int k) { return q * rows + k; };

    detail::EpsNfa eps;
    eps.alphabet = x.alphabet;
    eps.state_count = x.state_count * rows;
    for (int q : x.initial) eps.initial.push_back(id(q, 0));
    for (int q : x.accepting) eps.accepting.push_back(id(q, m));
    std::sort(eps.initial.begin(), eps.initial.end());
    std::sort(eps.accepting.begin(), eps.accepting.end());
    for (const Transition& t : x.transitions) {
        for (int k = 0; k <= m; ++k) {
            eps.letter_transitions.push_back({id(t.from, k), t.letter, id(t.to, k)});
        }
    }
    for (int k = 0; k < m; ++k) {
        int a = x.alphabet.index_of(u[static_cast<std::size_t>(k)]);
        for (int q = 0; q < x.state_count; ++q) {
            for (int t : table.targets(q, a)) {
                eps.silent.push_back({id(q, k), id(t, k + 1)});
            }
        }
    }
    return eps.eliminate();
}

/// Inverse of the erasing morphism that deletes the letters of `erased`:
/// on the determinized input, moves on erased letters become self-loops, so
/// the automaton processes the erasure of its input.
inline Nfa erase_inverse(const Nfa& x, const ShareSet& erased) {
    erased.require_within(x.alphabet, "erased subalphabet");
    Dfa d = determinize(x);
    for (int q = 0; q < d.state_count; ++q) {
        for (int a = 0; a < d.alphabet.size(); ++a) {
            if (erased.contains(d.alphabet.letter(a))) {
                d.delta[static_cast<std::size_t>(q) * d.alphabet.size() +
                        static_cast<std::size_t>(a)] = q;
            }
        }
    }
    return d.to_nfa();
}

/// L shuffled with the full alphabet star: self-loops on every letter at
/// every state.
inline Nfa upward_closure(const Nfa& x) {
    x.validate();
    Nfa out = x;
    for (int q = 0; q < out.state_count; ++q) {
        for (int a = 0; a < out.alphabet.size(); ++a) {
            out.transitions.push_back({q, out.alphabet.letter(a), q});
        }
    }
    out.normalize();
    return out;
}

/// Subwords of L: every letter transition may also be taken silently.
inline Nfa downward_closure(const Nfa& x) {
    x.validate();
    detail::EpsNfa eps;
    eps.alphabet = x.alphabet;
    eps.state_count = x.state_count;
    eps.initial = x.initial;
    eps.accepting = x.accepting;
    eps.letter_transitions = x.transitions;
    for (const Transition& t : x.transitions) eps.silent.push_back({t.from, t.to});
    return eps.eliminate();
}

inline bool is_subword_closed(const Nfa& x) {
    return equivalent(downward_closure(x), x).equivalent;
}

}  // namespace ptkit
