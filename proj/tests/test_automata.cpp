#include <catch2/catch_amalgamated.hpp>

#include "ptkit/ptkit.hpp"
#include "test_support.hpp"

using namespace ptkit;
namespace ts = testsupport;

namespace {

// Fig-style operands: partial one-state DFA for a* and two-state DFA for b*a,
// both over {a, b}.
Nfa astar_partial() { return Nfa{Alphabet("ab"), 1, {0}, {0}, {{0, 'a', 0}}}; }
Nfa bstar_a_partial() { return Nfa{Alphabet("ab"), 2, {0}, {1}, {{0, 'b', 0}, {0, 'a', 1}}}; }

bool same_language_upto(const Nfa& x, const Nfa& y, int maxlen) {
    return ts::accepted_upto(x, maxlen) == ts::accepted_upto(y, maxlen);
}

// Myhill-Nerode check used by the minimality test: two states are
// distinguishable when some word leads exactly one of them to acceptance.
bool all_pairs_distinguishable(const Dfa& d) {
    const int n = d.state_count;
    std::vector<std::vector<bool>> marked(static_cast<std::size_t>(n),
                                          std::vector<bool>(static_cast<std::size_t>(n), false));
    bool changed = true;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (d.accepting[static_cast<std::size_t>(p)] != d.accepting[static_cast<std::size_t>(q)]) {
                marked[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = true;
            }
        }
    }
    while (changed) {
        changed = false;
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                if (marked[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) continue;
                for (int a = 0; a < d.alphabet.size(); ++a) {
                    if (marked[static_cast<std::size_t>(d.step(p, a))]
                              [static_cast<std::size_t>(d.step(q, a))]) {
                        marked[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (!marked[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) return false;
        }
    }
    return true;
}

bool replay_cycle(const Nfa& n, const Witness& w) {
    // the anchor state must reach itself on the cycle word
    TransitionTable table(n);
    std::vector<char> current(static_cast<std::size_t>(n.state_count), 0);
    current[static_cast<std::size_t>(w.state)] = 1;
    for (char c : w.word) {
        std::vector<char> next(static_cast<std::size_t>(n.state_count), 0);
        int a = n.alphabet.index_of(c);
        for (int q = 0; q < n.state_count; ++q) {
            if (!current[static_cast<std::size_t>(q)]) continue;
            for (int t : table.targets(q, a)) next[static_cast<std::size_t>(t)] = 1;
        }
        current = std::move(next);
    }
    return current[static_cast<std::size_t>(w.state)] != 0;
}

}  // namespace

TEST_CASE("determinize reproduces the two-state powerset of a* shuffle b*a") {
    Dfa power = determinize(shuffle(astar_partial(), bstar_a_partial()));
    REQUIRE(power.state_count == 2);
    CHECK(power.initial == 0);
    CHECK_FALSE(power.accepting[0]);
    CHECK(power.accepting[1]);
    const Alphabet& ab = power.alphabet;
    CHECK(power.step(0, ab.index_of('a')) == 1);
    CHECK(power.step(0, ab.index_of('b')) == 0);
    CHECK(power.step(1, ab.index_of('a')) == 1);
    CHECK(power.step(1, ab.index_of('b')) == 0);  // the b-edge back
}

TEST_CASE("determinizing a complete DFA is isomorphic to its reachable part") {
    Alphabet ab("ab");
    Dfa d = filter_automaton("ab", ab);
    Dfa again = determinize(d.to_nfa());
    CHECK(isomorphic(d, again));

    // an unreachable state disappears
    Nfa with_extra = d.to_nfa();
    with_extra.state_count += 1;
    Dfa reduced = determinize(with_extra);
    CHECK(reduced.state_count == d.state_count);
    CHECK(isomorphic(reduced, d));
}

TEST_CASE("determinize of a|aa accepts exactly {a, aa}") {
    Alphabet a("a");
    Dfa d = determinize(compile_regex("a|aa", a));
    std::set<std::string> expected = {"a", "aa"};
    CHECK(ts::language_set(d.to_nfa(), 4) == expected);
}

TEST_CASE("minimize is idempotent and canonical") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Alphabet alphabet(std::string("abc").substr(0, 1 + rng.below(3)));
        Nfa n = ts::random_nfa(rng, alphabet, 6);
        Dfa min = minimal_dfa(n);
        CHECK(isomorphic(min, minimize(min)));
        CHECK(equivalent(min.to_nfa(), n).equivalent);
        CHECK(all_pairs_distinguishable(min));
    }
}

TEST_CASE("minimize keeps the Fig. 1 cycle") {
    Dfa power = determinize(shuffle(astar_partial(), bstar_a_partial()));
    Dfa min = minimize(power);
    CHECK(min.state_count == 2);
    CHECK_FALSE(is_acyclic(min).acyclic);
}

TEST_CASE("structurally different automata for (a|b)*a minimize to isomorphic DFAs") {
    Alphabet ab("ab");
    Dfa via_regex = minimal_dfa(compile_regex("(a|b)*a", ab));

    // hand-built: remember whether the last letter was a
    Dfa by_hand;
    by_hand.alphabet = ab;
    by_hand.state_count = 2;
    by_hand.initial = 0;
    by_hand.accepting = {false, true};
    by_hand.delta = {1, 0, 1, 0};  // both states: a -> 1, b -> 0
    Dfa min_hand = minimize(by_hand);

    CHECK(isomorphic(via_regex, min_hand));
}

TEST_CASE("equivalent languages minimize to isomorphic DFAs") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 15; ++trial) {
        Alphabet alphabet(std::string("ab").substr(0, 1 + rng.below(2)));
        Nfa x = ts::random_nfa(rng, alphabet, 5);
        // same language through a different route
        Nfa y = mirror(mirror(boolean(BoolOp::Union, x, x)));
        REQUIRE(equivalent(x, y).equivalent);
        CHECK(isomorphic(minimal_dfa(x), minimal_dfa(y)));
    }
}

TEST_CASE("boolean operations and mirror against enumeration") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        Alphabet alphabet(std::string("abc").substr(0, 1 + rng.below(3)));
        Nfa x = ts::random_nfa(rng, alphabet, 5);
        Nfa y = ts::random_nfa(rng, alphabet, 5);
        std::vector<char> fx = ts::accepted_upto(x, 6);
        std::vector<char> fy = ts::accepted_upto(y, 6);
        std::vector<char> funion = ts::accepted_upto(boolean(BoolOp::Union, x, y), 6);
        std::vector<char> finter = ts::accepted_upto(boolean(BoolOp::Intersection, x, y), 6);
        std::vector<char> fdiff = ts::accepted_upto(boolean(BoolOp::Difference, x, y), 6);
        std::vector<char> fcomp = ts::accepted_upto(complement(x), 6);
        for (std::size_t i = 0; i < fx.size(); ++i) {
            CHECK(static_cast<bool>(funion[i]) == (fx[i] || fy[i]));
            CHECK(static_cast<bool>(finter[i]) == (fx[i] && fy[i]));
            CHECK(static_cast<bool>(fdiff[i]) == (fx[i] && !fy[i]));
            CHECK(static_cast<bool>(fcomp[i]) == !fx[i]);
        }

        // mirror: membership of the reversal
        std::vector<std::string> words = ts::all_words(alphabet, 6);
        std::vector<char> fmirror = ts::accepted_upto(mirror(x), 6);
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::string rev(words[i].rbegin(), words[i].rend());
            CHECK(static_cast<bool>(fmirror[i]) == accepts(x, rev));
        }
    }
}

TEST_CASE("difference of a* and a|~ is a^2 a*") {
    Alphabet a("a");
    Nfa diff = boolean(BoolOp::Difference, compile_regex("a*", a), compile_regex("a|~", a));
    std::set<std::string> expected = {"aa", "aaa", "aaaa", "aaaaa", "aaaaaa"};
    CHECK(ts::language_set(diff, 6) == expected);
}

TEST_CASE("mirror is a language-level involution and De Morgan holds") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 15; ++trial) {
        Alphabet alphabet(std::string("ab").substr(0, 1 + rng.below(2)));
        Nfa x = ts::random_nfa(rng, alphabet, 5);
        Nfa y = ts::random_nfa(rng, alphabet, 5);
        CHECK(equivalent(mirror(mirror(x)), x).equivalent);
        Nfa lhs = complement(boolean(BoolOp::Union, x, y));
        Nfa rhs = boolean(BoolOp::Intersection, complement(x), complement(y));
        CHECK(equivalent(lhs, rhs).equivalent);
    }
}

TEST_CASE("operations reject mismatched alphabets") {
    Nfa x = compile_regex("a", Alphabet("a"));
    Nfa y = compile_regex("b", Alphabet("b"));
    CHECK_THROWS_AS(boolean(BoolOp::Union, x, y), AlphabetMismatchError);
    CHECK_THROWS_AS(equivalent(x, y), AlphabetMismatchError);
    CHECK_THROWS_AS(shuffle(x, y), AlphabetMismatchError);
}

TEST_CASE("equivalence verdicts and shortest witnesses") {
    Alphabet ab("ab");
    Nfa x = compile_regex("(a|b)*a", ab);
    CHECK(equivalent(x, x).equivalent);

    auto eq = equivalent(shuffle(astar_partial(), bstar_a_partial()), x);
    CHECK(eq.equivalent);

    auto diff = equivalent(compile_regex("a*", ab), compile_regex("(a|b)*", ab));
    REQUIRE_FALSE(diff.equivalent);
    REQUIRE(diff.witness.has_value());
    CHECK(diff.witness->word == "b");
}

TEST_CASE("acyclicity verdicts with replayable cycle words") {
    Alphabet ab("ab");
    Alphabet abc("abc");

    Dfa cyclic = minimal_dfa(compile_regex("(a|b)*a", ab));
    auto bad = is_acyclic(cyclic);
    REQUIRE_FALSE(bad.acyclic);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->word == "ab");
    CHECK(bad.witness->word.size() == 2);
    CHECK(replay_cycle(cyclic.to_nfa(), *bad.witness));

    CHECK(is_acyclic(minimal_dfa(compile_regex("a*", Alphabet("a")))).acyclic);

    Nfa sol = compile_regex("c*bb*c(b|c)*aa*b(a|b)*", abc);
    CHECK(is_acyclic(minimal_dfa(sol)).acyclic);
    CHECK(is_acyclic(minimal_dfa(mirror(sol))).acyclic);
}

TEST_CASE("cycle witnesses avoid self-loop powers when possible") {
    // 0 and 1 form an a-cycle while 0 also self-loops on a; the witness must
    // anchor where the word is not explained by a self-loop alone
    Alphabet a("a");
    Nfa n{a, 2, {0}, {1}, {{0, 'a', 0}, {0, 'a', 1}, {1, 'a', 0}}};
    auto result = is_acyclic(n);
    REQUIRE_FALSE(result.acyclic);
    REQUIRE(result.witness.has_value());
    CHECK(result.witness->word == "aa");
    CHECK(result.witness->state == 1);
    CHECK(replay_cycle(n, *result.witness));
}

TEST_CASE("depth of chains and the error on cycles") {
    Alphabet a("a");
    Alphabet ab("ab");
    CHECK(depth(minimal_dfa(compile_regex("a*", a))) == 0);

    Dfa filter = minimal_dfa(filter_automaton("ab", ab).to_nfa());
    CHECK(filter.state_count == 3);
    CHECK(depth(filter) == 2);

    CHECK_THROWS_AS(depth(minimal_dfa(compile_regex("(a|b)*a", ab))), NotAcyclicError);
}

TEST_CASE("determinize and minimize preserve the language on random inputs") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        Alphabet alphabet(std::string("abc").substr(0, 1 + rng.below(3)));
        Nfa n = ts::random_nfa(rng, alphabet, 6);
        CHECK(same_language_upto(determinize(n).to_nfa(), n, 7));
        CHECK(same_language_upto(minimal_dfa(n).to_nfa(), n, 7));
    }
}

TEST_CASE("bfs renumbering is stable and keeps the language") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 10; ++trial) {
        Nfa n = ts::random_nfa(rng, Alphabet("ab"), 6);
        Nfa r = bfs_renumber(n);
        CHECK(r == bfs_renumber(r));
        CHECK(equivalent(n, r).equivalent);
        CHECK(equivalent(n, trim(n)).equivalent);
    }
}
