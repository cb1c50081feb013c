#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "ptkit/errors.hpp"

namespace ptkit {

/// Finite ordered set of single-character symbols. Letters are stored sorted
/// and deduplicated, so alphabets over the same symbols compare equal no
/// matter how they were written down.
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::string_view letters) : letters_(letters) {
        std::sort(letters_.begin(), letters_.end());
        letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
        if (letters_.empty()) {
            throw FormatError("alphabet must contain at least one letter");
        }
    }

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    char letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }

    /// Index of `c` in sorted order, or -1 when absent.
    int index_of(char c) const noexcept {
        auto it = std::lower_bound(letters_.begin(), letters_.end(), c);
        if (it == letters_.end() || *it != c) return -1;
        return static_cast<int>(it - letters_.begin());
    }

    bool contains(char c) const noexcept { return index_of(c) >= 0; }

    bool contains_all(std::string_view word) const noexcept {
        return std::all_of(word.begin(), word.end(), [&](char c) { return contains(c); });
    }

    bool is_subset_of(const Alphabet& other) const noexcept {
        return other.contains_all(letters_);
    }

    const std::string& letters() const noexcept { return letters_; }

    friend Alphabet unite(const Alphabet& a, const Alphabet& b) {
        return Alphabet(a.letters_ + b.letters_);
    }

    bool operator==(const Alphabet&) const = default;

private:
    std::string letters_;
};

/// Subset of an alphabet: the sharing set C of the infiltration product, the
/// erased letters of an erasing morphism, or a stability test set.
class ShareSet {
public:
    ShareSet() = default;

    explicit ShareSet(std::string_view letters) : letters_(letters) {
        std::sort(letters_.begin(), letters_.end());
        letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    }

    static ShareSet empty_set() { return ShareSet(); }

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    bool contains(char c) const noexcept {
        return std::binary_search(letters_.begin(), letters_.end(), c);
    }
    const std::string& letters() const noexcept { return letters_; }

    void require_within(const Alphabet& alphabet, const char* what) const {
        if (!alphabet.contains_all(letters_)) {
            throw AlphabetMismatchError(std::string(what) +
                                        " is not a subset of the alphabet: " + letters_);
        }
    }

    bool operator==(const ShareSet&) const = default;

private:
    std::string letters_;
};

}  // namespace ptkit
