#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptkit/errors.hpp"
#include "ptkit/nfa.hpp"
#include "ptkit/witness.hpp"

namespace ptkit {

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Witness> witness;  // shortest word in the symmetric difference
};

struct AcyclicityResult {
    bool acyclic = false;
    std::optional<Witness> witness;  // shortest cycle word, lexicographic tie-break
};

namespace detail {

inline void require_same_alphabet(const Nfa& x, const Nfa& y) {
    if (x.alphabet != y.alphabet) {
        throw AlphabetMismatchError("operands must share the same alphabet ('" +
                                    x.alphabet.letters() + "' vs '" + y.alphabet.letters() +
                                    "')");
    }
}

}  // namespace detail

/// Subset construction restricted to reachable state-sets; the empty set acts
/// as the sink, so the result is always complete. States are numbered in BFS
/// discovery order.
inline Dfa determinize(const Nfa& n) {
    n.validate();
    TransitionTable table(n);
    const int letters = n.alphabet.size();

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    auto intern = [&](std::vector<int> subset) {
        auto [it, inserted] = ids.try_emplace(std::move(subset), static_cast<int>(subsets.size()));
        if (inserted) subsets.push_back(it->first);
        return it->second;
    };

    Dfa d;
    d.alphabet = n.alphabet;
    d.initial = intern(n.initial);

    for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
        for (int a = 0; a < letters; ++a) {
            std::vector<int> next;
            for (int p : subsets[static_cast<std::size_t>(q)]) {
                const auto& t = table.targets(p, a);
                next.insert(next.end(), t.begin(), t.end());
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            d.delta.push_back(intern(std::move(next)));
        }
    }

    d.state_count = static_cast<int>(subsets.size());
    d.accepting.assign(subsets.size(), false);
    for (std::size_t q = 0; q < subsets.size(); ++q) {
        for (int p : subsets[q]) {
            if (n.is_accepting(p)) {
                d.accepting[q] = true;
                break;
            }
        }
    }
    return d;
}

/// Reachable part of a complete DFA with states renumbered by BFS over
/// letters in alphabet order. Two equivalent minimal DFAs have identical
/// canonical forms, which makes isomorphism a structural comparison.
inline Dfa bfs_canonical(const Dfa& d) {
    const int letters = d.alphabet.size();
    std::vector<int> newid(static_cast<std::size_t>(d.state_count), -1);
    std::vector<int> order;
    newid[static_cast<std::size_t>(d.initial)] = 0;
    order.push_back(d.initial);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int a = 0; a < letters; ++a) {
            int t = d.step(order[i], a);
            if (newid[static_cast<std::size_t>(t)] < 0) {
                newid[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }

    Dfa out;
    out.alphabet = d.alphabet;
    out.state_count = static_cast<int>(order.size());
    out.initial = 0;
    out.accepting.resize(order.size());
    out.delta.resize(order.size() * static_cast<std::size_t>(letters));
    for (std::size_t q = 0; q < order.size(); ++q) {
        out.accepting[q] = d.accepting[static_cast<std::size_t>(order[q])];
        for (int a = 0; a < letters; ++a) {
            out.delta[q * static_cast<std::size_t>(letters) + static_cast<std::size_t>(a)] =
                newid[static_cast<std::size_t>(d.step(order[q], a))];
        }
    }
    return out;
}

/// Canonical minimal complete DFA: reachable states only, Myhill-Nerode
/// classes merged by partition refinement, BFS-canonical numbering.
inline Dfa minimize(const Dfa& d) {
    Dfa r = bfs_canonical(d);  // drops unreachable states
    const int n = r.state_count;
    const int letters = r.alphabet.size();

    std::vector<int> cls(static_cast<std::size_t>(n));
    int class_count;
    {
        std::map<bool, int> first;
        class_count = 0;
        for (int q = 0; q < n; ++q) {
            auto [it, inserted] = first.try_emplace(static_cast<bool>(r.accepting[static_cast<std::size_t>(q)]), class_count);
            if (inserted) ++class_count;
            cls[static_cast<std::size_t>(q)] = it->second;
        }
    }

    while (true) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(letters) + 1);
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int a = 0; a < letters; ++a) {
                sig.push_back(cls[static_cast<std::size_t>(r.step(q, a))]);
            }
            auto [it, inserted] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size()));
            (void)inserted;
            next[static_cast<std::size_t>(q)] = it->second;
        }
        if (static_cast<int>(ids.size()) == class_count) break;
        class_count = static_cast<int>(ids.size());
        cls = std::move(next);
    }

    Dfa q;
    q.alphabet = r.alphabet;
    q.state_count = class_count;
    q.initial = cls[static_cast<std::size_t>(r.initial)];
    q.accepting.assign(static_cast<std::size_t>(class_count), false);
    q.delta.assign(static_cast<std::size_t>(class_count) * letters, 0);
    for (int s = 0; s < n; ++s) {
        int c = cls[static_cast<std::size_t>(s)];
        q.accepting[static_cast<std::size_t>(c)] = r.accepting[static_cast<std::size_t>(s)];
        for (int a = 0; a < letters; ++a) {
            q.delta[static_cast<std::size_t>(c) * letters + static_cast<std::size_t>(a)] =
                cls[static_cast<std::size_t>(r.step(s, a))];
        }
    }
    return bfs_canonical(q);
}

inline Dfa minimal_dfa(const Nfa& n) { return minimize(determinize(n)); }

inline bool isomorphic(const Dfa& a, const Dfa& b) {
    return bfs_canonical(a) == bfs_canonical(b);
}

enum class BoolOp { Union, Intersection, Difference };

/// Determinizes and flips acceptance; the subset construction's empty-set
/// sink provides the completion.
inline Nfa complement(const Nfa& x) {
    Dfa d = determinize(x);
    d.accepting.flip();
    return d.to_nfa();
}

/// Reverses every transition and swaps initial/accepting states.
inline Nfa mirror(const Nfa& x) {
    Nfa out;
    out.alphabet = x.alphabet;
    out.state_count = x.state_count;
    out.initial = x.accepting;
    out.accepting = x.initial;
    out.transitions.reserve(x.transitions.size());
    for (const Transition& t : x.transitions) {
        out.transitions.push_back({t.to, t.letter, t.from});
    }
    out.normalize();
    return out;
}

namespace detail {

// Pair product over reachable states; `combine` decides acceptance from the
// operand acceptance flags.
template <typename Combine>
Nfa dfa_product(const Dfa& x, const Dfa& y, Combine combine) {
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
    out.initial = {intern({x.initial, y.initial})};
    for (int q = 0; q < static_cast<int>(pairs.size()); ++q) {
        auto [px, py] = pairs[static_cast<std::size_t>(q)];
        for (int a = 0; a < letters; ++a) {
            int t = intern({x.step(px, a), y.step(py, a)});
            out.transitions.push_back({q, x.alphabet.letter(a), t});
        }
    }
    out.state_count = static_cast<int>(pairs.size());
    for (int q = 0; q < out.state_count; ++q) {
        auto [px, py] = pairs[static_cast<std::size_t>(q)];
        if (combine(static_cast<bool>(x.accepting[static_cast<std::size_t>(px)]),
                    static_cast<bool>(y.accepting[static_cast<std::size_t>(py)]))) {
            out.accepting.push_back(q);
        }
    }
    out.normalize();
    return out;
}

}  // namespace detail

inline Nfa boolean(BoolOp op, const Nfa& x, const Nfa& y) {
    detail::require_same_alphabet(x, y);
    if (op == BoolOp::Union) {
        // disjoint sum; no determinization needed
        x.validate();
        y.validate();
        Nfa out = x;
        int off = x.state_count;
        out.state_count += y.state_count;
        for (int q : y.initial) out.initial.push_back(q + off);
        for (int q : y.accepting) out.accepting.push_back(q + off);
        for (const Transition& t : y.transitions) {
            out.transitions.push_back({t.from + off, t.letter, t.to + off});
        }
        out.normalize();
        return out;
    }
    Dfa dx = determinize(x);
    Dfa dy = determinize(y);
    if (op == BoolOp::Intersection) {
        return detail::dfa_product(dx, dy, [](bool a, bool b) { return a && b; });
    }
    return detail::dfa_product(dx, dy, [](bool a, bool b) { return a && !b; });
}

/// Language equality via BFS over the product of the determinized operands.
/// On inequality the witness is the shortest difference word, letters
/// explored in alphabet order, so it is also lexicographically least.
inline EquivalenceResult equivalent(const Nfa& x, const Nfa& y) {
    detail::require_same_alphabet(x, y);
    Dfa dx = determinize(x);
    Dfa dy = determinize(y);
    const int letters = dx.alphabet.size();

    struct Node {
        int px, py, parent;
        char letter;
    };
    std::map<std::pair<int, int>, int> seen;
    std::vector<Node> nodes;
    auto push = [&](int px, int py, int parent, char letter) {
        auto [it, inserted] = seen.try_emplace({px, py}, static_cast<int>(nodes.size()));
        if (inserted) nodes.push_back({px, py, parent, letter});
        return it->second;
    };

    push(dx.initial, dy.initial, -1, '\0');
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Node node = nodes[i];
        bool ax = dx.accepting[static_cast<std::size_t>(node.px)];
        bool ay = dy.accepting[static_cast<std::size_t>(node.py)];
        if (ax != ay) {
            std::string word;
            for (int j = static_cast<int>(i); nodes[static_cast<std::size_t>(j)].parent >= 0;
                 j = nodes[static_cast<std::size_t>(j)].parent) {
                word.push_back(nodes[static_cast<std::size_t>(j)].letter);
            }
            std::reverse(word.begin(), word.end());
            return {false, Witness::difference(std::move(word))};
        }
        for (int a = 0; a < letters; ++a) {
            push(dx.step(node.px, a), dy.step(node.py, a), static_cast<int>(i),
                 dx.alphabet.letter(a));
        }
    }
    return {true, std::nullopt};
}

/// True iff the only loops are self-loops. On failure returns the globally
/// shortest cycle word (ties: lexicographically least, then smallest anchor
/// state); the cycle visits at least two distinct states.
inline AcyclicityResult is_acyclic(const Nfa& n) {
    const int letters = n.alphabet.size();
    TransitionTable table(n);

    // Kahn's peeling on the graph without self-loops: survivors contain
    // every state that lies on a nontrivial cycle.
    std::vector<int> indeg(static_cast<std::size_t>(n.state_count), 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n.state_count));
    for (int q = 0; q < n.state_count; ++q) {
        std::vector<int> outs;
        for (int a = 0; a < letters; ++a) {
            for (int t : table.targets(q, a)) {
                if (t != q) outs.push_back(t);
            }
        }
        std::sort(outs.begin(), outs.end());
        outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
        succ[static_cast<std::size_t>(q)] = std::move(outs);
        for (int t : succ[static_cast<std::size_t>(q)]) ++indeg[static_cast<std::size_t>(t)];
    }
    std::deque<int> ready;
    for (int q = 0; q < n.state_count; ++q) {
        if (indeg[static_cast<std::size_t>(q)] == 0) ready.push_back(q);
    }
    int peeled = 0;
    std::vector<char> removed(static_cast<std::size_t>(n.state_count), 0);
    while (!ready.empty()) {
        int q = ready.front();
        ready.pop_front();
        removed[static_cast<std::size_t>(q)] = 1;
        ++peeled;
        for (int t : succ[static_cast<std::size_t>(q)]) {
            if (--indeg[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
        }
    }
    if (peeled == n.state_count) return {true, std::nullopt};

    // Survivors closed a cycle somewhere; find the best cycle word by BFS
    // from every surviving state. Words that are just powers of a letter
    // self-looping at the anchor are kept only as a last resort, since they
    // do not distinguish the cycle from the self-loop.
    auto better = [](const std::optional<std::string>& challenger,
                     const std::optional<std::string>& incumbent) {
        if (!challenger) return false;
        if (!incumbent) return true;
        if (challenger->size() != incumbent->size()) {
            return challenger->size() < incumbent->size();
        }
        return *challenger < *incumbent;
    };
    std::optional<std::string> best_word, fallback_word;
    int best_state = -1, fallback_state = -1;
    for (int p = 0; p < n.state_count; ++p) {
        if (removed[static_cast<std::size_t>(p)]) continue;
        struct Node {
            int state, parent;
            char letter;
        };
        std::vector<Node> nodes;
        std::vector<int> at(static_cast<std::size_t>(n.state_count), -1);
        nodes.push_back({p, -1, '\0'});
        at[static_cast<std::size_t>(p)] = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            int q = nodes[i].state;
            for (int a = 0; a < letters; ++a) {
                for (int t : table.targets(q, a)) {
                    if (t == q || removed[static_cast<std::size_t>(t)]) continue;
                    if (at[static_cast<std::size_t>(t)] >= 0) continue;
                    at[static_cast<std::size_t>(t)] = static_cast<int>(nodes.size());
                    nodes.push_back({t, static_cast<int>(i), n.alphabet.letter(a)});
                }
            }
        }
        auto self_loop_power = [&](const std::string& word) {
            char c = word.front();
            if (!std::all_of(word.begin(), word.end(), [&](char x) { return x == c; })) {
                return false;
            }
            const auto& t = table.targets(p, n.alphabet.index_of(c));
            return std::binary_search(t.begin(), t.end(), p);
        };
        // close the cycle with any edge back into p
        std::optional<std::string> local, local_fallback;
        for (int q = 0; q < n.state_count; ++q) {
            if (q == p || at[static_cast<std::size_t>(q)] < 0) continue;
            for (int a = 0; a < letters; ++a) {
                const auto& t = table.targets(q, a);
                if (!std::binary_search(t.begin(), t.end(), p)) continue;
                std::string word;
                for (int j = at[static_cast<std::size_t>(q)];
                     nodes[static_cast<std::size_t>(j)].parent >= 0;
                     j = nodes[static_cast<std::size_t>(j)].parent) {
                    word.push_back(nodes[static_cast<std::size_t>(j)].letter);
                }
                std::reverse(word.begin(), word.end());
                word.push_back(n.alphabet.letter(a));
                std::optional<std::string>& slot = self_loop_power(word) ? local_fallback : local;
                std::optional<std::string> candidate = std::move(word);
                if (better(candidate, slot)) slot = std::move(candidate);
            }
        }
        if (better(local, best_word)) {
            best_word = std::move(local);
            best_state = p;
        }
        if (better(local_fallback, fallback_word)) {
            fallback_word = std::move(local_fallback);
            fallback_state = p;
        }
    }
    if (!best_word) {
        best_word = std::move(fallback_word);
        best_state = fallback_state;
    }
    return {false, Witness::cycle(*best_word, best_state)};
}

inline AcyclicityResult is_acyclic(const Dfa& d) { return is_acyclic(d.to_nfa()); }

/// Longest self-loop-free path from the initial state to any reachable
/// state, counted in transitions. Defined for acyclic automata only.
inline int depth(const Dfa& d) {
    auto acyclic = is_acyclic(d);
    if (!acyclic.acyclic) {
        throw NotAcyclicError("depth is undefined: automaton has a non-self-loop cycle",
                              acyclic.witness->word, acyclic.witness->state);
    }
    Dfa r = bfs_canonical(d);
    const int letters = r.alphabet.size();

    // topological order by peeling; all states are reachable after
    // bfs_canonical, so every state gets a longest-path value
    std::vector<int> indeg(static_cast<std::size_t>(r.state_count), 0);
    for (int q = 0; q < r.state_count; ++q) {
        for (int a = 0; a < letters; ++a) {
            int t = r.step(q, a);
            if (t != q) ++indeg[static_cast<std::size_t>(t)];
        }
    }
    std::deque<int> ready;
    for (int q = 0; q < r.state_count; ++q) {
        if (indeg[static_cast<std::size_t>(q)] == 0) ready.push_back(q);
    }
    std::vector<int> dist(static_cast<std::size_t>(r.state_count), 0);
    int best = 0;
    while (!ready.empty()) {
        int q = ready.front();
        ready.pop_front();
        best = std::max(best, dist[static_cast<std::size_t>(q)]);
        for (int a = 0; a < letters; ++a) {
            int t = r.step(q, a);
            if (t == q) continue;
            dist[static_cast<std::size_t>(t)] =
                std::max(dist[static_cast<std::size_t>(t)], dist[static_cast<std::size_t>(q)] + 1);
            if (--indeg[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
        }
    }
    return best;
}

/// Renumbers states by multi-source BFS from the initial set, transitions
/// explored in (letter, target) order. Unreachable states are dropped when
/// `drop_unreachable` is set, otherwise appended in their original order.
inline Nfa bfs_renumber(const Nfa& n, bool drop_unreachable = false) {
    TransitionTable table(n);
    const int letters = n.alphabet.size();
    std::vector<int> newid(static_cast<std::size_t>(n.state_count), -1);
    std::vector<int> order;
    for (int q : n.initial) {
        if (newid[static_cast<std::size_t>(q)] < 0) {
            newid[static_cast<std::size_t>(q)] = static_cast<int>(order.size());
            order.push_back(q);
        }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int a = 0; a < letters; ++a) {
            for (int t : table.targets(order[i], a)) {
                if (newid[static_cast<std::size_t>(t)] < 0) {
                    newid[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                    order.push_back(t);
                }
            }
        }
    }
    if (!drop_unreachable) {
        for (int q = 0; q < n.state_count; ++q) {
            if (newid[static_cast<std::size_t>(q)] < 0) {
                newid[static_cast<std::size_t>(q)] = static_cast<int>(order.size());
                order.push_back(q);
            }
        }
    }

    Nfa out;
    out.alphabet = n.alphabet;
    out.state_count = static_cast<int>(order.size());
    for (int q : n.initial) out.initial.push_back(newid[static_cast<std::size_t>(q)]);
    for (int q : n.accepting) {
        if (newid[static_cast<std::size_t>(q)] >= 0) {
            out.accepting.push_back(newid[static_cast<std::size_t>(q)]);
        }
    }
    for (const Transition& t : n.transitions) {
        int f = newid[static_cast<std::size_t>(t.from)];
        int g = newid[static_cast<std::size_t>(t.to)];
        if (f >= 0 && g >= 0) out.transitions.push_back({f, t.letter, g});
    }
    out.normalize();
    return out;
}

inline Nfa trim(const Nfa& n) { return bfs_renumber(n, /*drop_unreachable=*/true); }

}  // namespace ptkit
