#include <catch2/catch_amalgamated.hpp>

#include "ptkit/ptkit.hpp"
#include "test_support.hpp"

using namespace ptkit;
namespace ts = testsupport;

TEST_CASE("serialization uses the documented field names and order") {
    Alphabet ab("ab");
    Nfa n = word_automaton("a", ab);
    std::string expected =
        R"({"alphabet":["a","b"],"states":2,"initial":[0],"accepting":[1],"transitions":[[0,"a",1]]})"
        "\n";
    CHECK(to_json_string(n) == expected);
}

TEST_CASE("serialize-parse-serialize is the identity on the canonical form") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        Alphabet alphabet(std::string("abc").substr(0, 1 + rng.below(3)));
        Nfa n = ts::random_nfa(rng, alphabet, 6);
        std::string first = to_json_string(n);
        Nfa parsed = automaton_from_json_text(first);
        CHECK(equivalent(n, parsed).equivalent);
        CHECK(to_json_string(parsed) == first);
    }
}

TEST_CASE("a document is a DFA exactly when the invariants hold") {
    Alphabet ab("ab");
    Dfa d = filter_automaton("ab", ab);
    Nfa as_nfa = automaton_from_json_text(to_json_string(d.to_nfa()));
    CHECK(satisfies_dfa_invariants(as_nfa));
    REQUIRE(dfa_from_nfa(as_nfa).has_value());
    CHECK(equivalent(dfa_from_nfa(as_nfa)->to_nfa(), d.to_nfa()).equivalent);

    Nfa partial{ab, 1, {0}, {0}, {{0, 'a', 0}}};  // missing the b move
    CHECK_FALSE(satisfies_dfa_invariants(partial));
    CHECK_FALSE(dfa_from_nfa(partial).has_value());

    Nfa twice{ab, 1, {0}, {0}, {{0, 'a', 0}, {0, 'b', 0}}};
    CHECK(satisfies_dfa_invariants(twice));

    Nfa no_initial{ab, 1, {}, {0}, {{0, 'a', 0}, {0, 'b', 0}}};
    CHECK_FALSE(satisfies_dfa_invariants(no_initial));
}

TEST_CASE("malformed documents are rejected with format errors") {
    CHECK_THROWS_AS(automaton_from_json_text("not json at all"), FormatError);
    CHECK_THROWS_AS(automaton_from_json_text("[]"), FormatError);
    CHECK_THROWS_AS(automaton_from_json_text(R"({"alphabet":["a"]})"), FormatError);
    CHECK_THROWS_AS(automaton_from_json_text(
                        R"({"alphabet":["ab"],"states":1,"initial":[],"accepting":[],"transitions":[]})"),
                    FormatError);
    CHECK_THROWS_AS(automaton_from_json_text(
                        R"({"alphabet":["a"],"states":1,"initial":[3],"accepting":[],"transitions":[]})"),
                    FormatError);
    CHECK_THROWS_AS(automaton_from_json_text(
                        R"({"alphabet":["a"],"states":-1,"initial":[],"accepting":[],"transitions":[]})"),
                    FormatError);
    CHECK_THROWS_AS(automaton_from_json_text(
                        R"({"alphabet":["a"],"states":1,"initial":[0],"accepting":[],"transitions":[[0,"b",0]]})"),
                    FormatError);
    CHECK_THROWS_AS(automaton_from_json_text(
                        R"({"alphabet":["a"],"states":1,"initial":[0],"accepting":[],"transitions":[[0,"a"]]})"),
                    FormatError);
    CHECK_THROWS_AS(load_automaton_file("/nonexistent/automaton.json"), FormatError);
}

TEST_CASE("dot export shape") {
    Alphabet abc("abc");
    Dfa filter = filter_automaton("a", abc);
    std::string dot = to_dot(filter.to_nfa());
    CHECK(dot.find("digraph automaton {") != std::string::npos);
    CHECK(dot.find("__start0 [shape=point") != std::string::npos);
    CHECK(dot.find("__start0 -> s0;") != std::string::npos);
    CHECK(dot.find("s1 [shape=doublecircle];") != std::string::npos);
    // state 0 self-loops on b and c: letters joined on one edge
    CHECK(dot.find("s0 -> s0 [label=\"b,c\"];") != std::string::npos);
    CHECK(dot.find("s0 -> s1 [label=\"a\"];") != std::string::npos);
}

TEST_CASE("witness serialization") {
    nlohmann::ordered_json cycle = witness_to_json(Witness::cycle("ab", 1));
    CHECK(cycle["kind"] == "cycle-word");
    CHECK(cycle["word"] == "ab");
    CHECK(cycle["state"] == 1);

    nlohmann::ordered_json diff = witness_to_json(Witness::difference("b"));
    CHECK(diff["kind"] == "difference-word");

    nlohmann::ordered_json violation = witness_to_json(Witness::closure_violation("a", "aa", 1));
    CHECK(violation["kind"] == "closure-violation");
    CHECK(violation["u"] == "a");
    CHECK(violation["v"] == "aa");
    CHECK(violation["k"] == 1);
}
