#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptkit {

// Regular-expression text could not be parsed. offset() is the byte position
// in the original input (whitespace included) where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Malformed automaton document or violated structural invariant.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Binary operation over distinct alphabets, or a subalphabet/word argument
// not contained in the operand's alphabet.
class AlphabetMismatchError : public std::invalid_argument {
public:
    explicit AlphabetMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

// depth() applied to an automaton with a non-self-loop cycle. Carries the
// cycle evidence so callers can report it.
class NotAcyclicError : public std::runtime_error {
public:
    NotAcyclicError(const std::string& what, std::string cycle_word, int state)
        : std::runtime_error(what), cycle_word_(std::move(cycle_word)), state_(state) {}
    const std::string& cycle_word() const noexcept { return cycle_word_; }
    int state() const noexcept { return state_; }

private:
    std::string cycle_word_;
    int state_;
};

// A bounded exploration exceeded its state cap. Callers either raise the cap
// or report the check as skipped; the failure is never silent.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& what, std::size_t limit)
        : std::runtime_error(what), limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

}  // namespace ptkit
