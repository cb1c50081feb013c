#pragma once

#include <string>

namespace ptkit {

/// Replayable evidence for a failed property: a word cycling through a state,
/// a shortest word in a symmetric difference, or a pair of ~_k-equivalent
/// words split by the language.
struct Witness {
    enum class Kind { CycleWord, DifferenceWord, ClosureViolation };

    Kind kind = Kind::DifferenceWord;
    std::string word;        // cycle word, difference word, or u of a violation
    std::string other_word;  // v of a closure violation
    int bound = -1;          // k of a closure violation
    int state = -1;          // anchor state of a cycle word

    static Witness cycle(std::string word, int state) {
        Witness w;
        w.kind = Kind::CycleWord;
        w.word = std::move(word);
        w.state = state;
        return w;
    }

    static Witness difference(std::string word) {
        Witness w;
        w.kind = Kind::DifferenceWord;
        w.word = std::move(word);
        return w;
    }

    static Witness closure_violation(std::string in_language, std::string out_of_language,
                                     int k) {
        Witness w;
        w.kind = Kind::ClosureViolation;
        w.word = std::move(in_language);
        w.other_word = std::move(out_of_language);
        w.bound = k;
        return w;
    }

    bool operator==(const Witness&) const = default;
};

}  // namespace ptkit
