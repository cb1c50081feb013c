#pragma once

#include <optional>

#include "ptkit/automata.hpp"
#include "ptkit/witness.hpp"

namespace ptkit {

enum class CycleSide { Forward, Mirror };

/// R-/L-/J-triviality and piecewise-testability verdicts for a regular
/// language. A regular language is R-trivial iff its minimal DFA is acyclic,
/// L-trivial iff the mirror's minimal DFA is, and piecewise-testable iff
/// both hold. The witness is the cycle evidence from the first failing side.
struct TrivialityReport {
    bool r_trivial = false;
    bool l_trivial = false;
    bool j_trivial = false;
    bool pt = false;
    std::optional<Witness> witness;
    std::optional<CycleSide> witness_side;
};

inline TrivialityReport analyze(const Nfa& x) {
    TrivialityReport rep;

    Dfa forward = minimal_dfa(x);
    AcyclicityResult fwd = is_acyclic(forward);
    rep.r_trivial = fwd.acyclic;

    // mirroring the already-minimal DFA keeps the second determinization small
    Dfa backward = minimal_dfa(mirror(forward.to_nfa()));
    AcyclicityResult bwd = is_acyclic(backward);
    rep.l_trivial = bwd.acyclic;

    rep.j_trivial = rep.r_trivial && rep.l_trivial;
    rep.pt = rep.j_trivial;
    if (!fwd.acyclic) {
        rep.witness = fwd.witness;
        rep.witness_side = CycleSide::Forward;
    } else if (!bwd.acyclic) {
        rep.witness = bwd.witness;
        rep.witness_side = CycleSide::Mirror;
    }
    return rep;
}

/// True iff every letter of `b` self-loops at `state`.
inline bool is_b_stable(const Dfa& d, int state, const ShareSet& b) {
    if (state < 0 || state >= d.state_count) {
        throw FormatError("state " + std::to_string(state) + " out of range");
    }
    b.require_within(d.alphabet, "stability set");
    for (char c : b.letters()) {
        if (d.step(state, d.alphabet.index_of(c)) != state) return false;
    }
    return true;
}

}  // namespace ptkit
