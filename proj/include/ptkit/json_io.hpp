#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ptkit/automata.hpp"
#include "ptkit/nfa.hpp"
#include "ptkit/witness.hpp"

namespace ptkit {

/// Serializes with BFS-canonical state numbering and the fixed key order
/// {alphabet, states, initial, accepting, transitions}, so equal inputs give
/// byte-identical documents.
inline nlohmann::ordered_json automaton_to_json(const Nfa& input) {
    Nfa n = bfs_renumber(input);
    nlohmann::ordered_json j;
    nlohmann::ordered_json alphabet = nlohmann::ordered_json::array();
    for (char c : n.alphabet.letters()) alphabet.push_back(std::string(1, c));
    j["alphabet"] = std::move(alphabet);
    j["states"] = n.state_count;
    j["initial"] = n.initial;
    j["accepting"] = n.accepting;
    nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
    for (const Transition& t : n.transitions) {
        transitions.push_back({t.from, std::string(1, t.letter), t.to});
    }
    j["transitions"] = std::move(transitions);
    return j;
}

inline std::string to_json_string(const Nfa& n) { return automaton_to_json(n).dump() + "\n"; }

inline Nfa automaton_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw FormatError("automaton document must be a JSON object");
    for (const char* key : {"alphabet", "states", "initial", "accepting", "transitions"}) {
        if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    }

    Nfa n;
    std::string letters;
    if (!j["alphabet"].is_array()) throw FormatError("\"alphabet\" must be an array");
    for (const auto& entry : j["alphabet"]) {
        if (!entry.is_string() || entry.get<std::string>().size() != 1) {
            throw FormatError("alphabet entries must be single-character strings");
        }
        letters += entry.get<std::string>();
    }
    n.alphabet = Alphabet(letters);

    if (!j["states"].is_number_integer() || j["states"].get<long long>() < 0) {
        throw FormatError("\"states\" must be a nonnegative integer");
    }
    n.state_count = j["states"].get<int>();

    auto read_states = [&](const nlohmann::json& arr, const char* what) {
        if (!arr.is_array()) throw FormatError(std::string("\"") + what + "\" must be an array");
        std::vector<int> out;
        for (const auto& entry : arr) {
            if (!entry.is_number_integer()) {
                throw FormatError(std::string(what) + " entries must be integers");
            }
            out.push_back(entry.get<int>());
        }
        return out;
    };
    n.initial = read_states(j["initial"], "initial");
    n.accepting = read_states(j["accepting"], "accepting");

    if (!j["transitions"].is_array()) throw FormatError("\"transitions\" must be an array");
    for (const auto& entry : j["transitions"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_string() || entry[1].get<std::string>().size() != 1 ||
            !entry[2].is_number_integer()) {
            throw FormatError("transitions must be [source, \"letter\", target] triples");
        }
        n.transitions.push_back(
            {entry[0].get<int>(), entry[1].get<std::string>()[0], entry[2].get<int>()});
    }

    n.normalize();
    n.validate();
    return n;
}

inline Nfa automaton_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw FormatError("invalid JSON");
    return automaton_from_json(j);
}

inline Nfa load_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return automaton_from_json_text(buffer.str());
}

inline void save_automaton_file(const Nfa& n, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << to_json_string(n);
}

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
    nlohmann::ordered_json j;
    switch (w.kind) {
        case Witness::Kind::CycleWord:
            j["kind"] = "cycle-word";
            j["word"] = w.word;
            j["state"] = w.state;
            break;
        case Witness::Kind::DifferenceWord:
            j["kind"] = "difference-word";
            j["word"] = w.word;
            break;
        case Witness::Kind::ClosureViolation:
            j["kind"] = "closure-violation";
            j["u"] = w.word;
            j["v"] = w.other_word;
            j["k"] = w.bound;
            break;
    }
    return j;
}

}  // namespace ptkit
