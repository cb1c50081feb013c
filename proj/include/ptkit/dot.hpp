#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "ptkit/nfa.hpp"

namespace ptkit {

/// Graphviz export: doubled border for accepting states, a synthetic point
/// node with an arrow for each initial state, letters sharing (src, dst)
/// joined by commas on one edge.
inline std::string to_dot(const Nfa& n) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < n.initial.size(); ++i) {
        out << "  __start" << i << " [shape=point, label=\"\"];\n";
        out << "  __start" << i << " -> s" << n.initial[i] << ";\n";
    }
    for (int q = 0; q < n.state_count; ++q) {
        out << "  s" << q;
        if (n.is_accepting(q)) out << " [shape=doublecircle]";
        out << ";\n";
    }
    std::map<std::pair<int, int>, std::string> labels;
    for (const Transition& t : n.transitions) {
        std::string& label = labels[{t.from, t.to}];
        if (!label.empty()) label += ",";
        label += t.letter;
    }
    for (const auto& [edge, label] : labels) {
        out << "  s" << edge.first << " -> s" << edge.second << " [label=\"" << label
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ptkit
