#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptkit/alphabet.hpp"
#include "ptkit/errors.hpp"
#include "ptkit/nfa.hpp"

namespace ptkit {

/// Syntax tree of the expression language. Tokens: alphabet letters, `|` for
/// union, juxtaposition for concatenation, `*` for star, `~` for the empty
/// word, `#` for the empty language, parentheses for grouping; whitespace is
/// ignored. `*` binds tightest, then concatenation, then `|`.
struct RegexAst {
    enum class Kind { EmptyLanguage, Epsilon, Letter, Union, Concat, Star };

    Kind kind = Kind::EmptyLanguage;
    char letter = '\0';
    std::vector<RegexAst> children;

    static RegexAst empty_language() { return RegexAst{}; }
    static RegexAst epsilon() { return RegexAst{Kind::Epsilon, '\0', {}}; }
    static RegexAst letter_node(char c) { return RegexAst{Kind::Letter, c, {}}; }
    static RegexAst union_node(RegexAst l, RegexAst r) {
        RegexAst n{Kind::Union, '\0', {}};
        n.children.push_back(std::move(l));
        n.children.push_back(std::move(r));
        return n;
    }
    static RegexAst concat_node(RegexAst l, RegexAst r) {
        RegexAst n{Kind::Concat, '\0', {}};
        n.children.push_back(std::move(l));
        n.children.push_back(std::move(r));
        return n;
    }
    static RegexAst star_node(RegexAst inner) {
        RegexAst n{Kind::Star, '\0', {}};
        n.children.push_back(std::move(inner));
        return n;
    }

    bool operator==(const RegexAst&) const = default;
};

namespace detail {

class RegexParser {
public:
    RegexParser(std::string_view text, const Alphabet& alphabet)
        : text_(text), alphabet_(alphabet) {}

    RegexAst parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        RegexAst ast = parse_union();
        skip_ws();
        if (!at_end()) {
            if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
            throw ParseError("unexpected input", pos_);
        }
        return ast;
    }

private:
    RegexAst parse_union() {
        RegexAst left = parse_concat();
        skip_ws();
        while (!at_end() && text_[pos_] == '|') {
            ++pos_;
            RegexAst right = parse_concat();
            left = RegexAst::union_node(std::move(left), std::move(right));
            skip_ws();
        }
        return left;
    }

    RegexAst parse_concat() {
        RegexAst left = parse_factor();
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = text_[pos_];
            if (c == '|' || c == ')') break;
            RegexAst right = parse_factor();
            left = RegexAst::concat_node(std::move(left), std::move(right));
        }
        return left;
    }

    RegexAst parse_factor() {
        RegexAst node = parse_atom();
        while (true) {
            skip_ws();
            if (at_end() || text_[pos_] != '*') break;
            ++pos_;
            node = RegexAst::star_node(std::move(node));
        }
        return node;
    }

    RegexAst parse_atom() {
        skip_ws();
        if (at_end()) throw ParseError("expected an atom", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RegexAst inner = parse_union();
            skip_ws();
            if (at_end() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '~') {
            ++pos_;
            return RegexAst::epsilon();
        }
        if (c == '#') {
            ++pos_;
            return RegexAst::empty_language();
        }
        if (c == '|' || c == ')' || c == '*') {
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        }
        if (!alphabet_.contains(c)) {
            throw ParseError(std::string("letter '") + c + "' outside the alphabet", pos_);
        }
        ++pos_;
        return RegexAst::letter_node(c);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

inline void validate_ast(const RegexAst& ast, const Alphabet& alphabet) {
    if (ast.kind == RegexAst::Kind::Letter && !alphabet.contains(ast.letter)) {
        throw AlphabetMismatchError(std::string("letter '") + ast.letter +
                                    "' outside the alphabet");
    }
    for (const RegexAst& c : ast.children) validate_ast(c, alphabet);
}

// Position-automaton construction. One state per letter occurrence plus a
// start state; no epsilon transitions to eliminate afterwards.
struct GlushkovBuilder {
    std::vector<char> position_letter;       // 1-based positions
    std::vector<std::vector<int>> follow;    // 1-based

    struct NodeSets {
        bool nullable = false;
        std::vector<int> first, last;
    };

    NodeSets build(const RegexAst& n) {
        using Kind = RegexAst::Kind;
        NodeSets out;
        switch (n.kind) {
            case Kind::EmptyLanguage:
                break;
            case Kind::Epsilon:
                out.nullable = true;
                break;
            case Kind::Letter: {
                position_letter.push_back(n.letter);
                follow.emplace_back();
                int p = static_cast<int>(position_letter.size());
                out.first = {p};
                out.last = {p};
                break;
            }
            case Kind::Union: {
                NodeSets l = build(n.children[0]);
                NodeSets r = build(n.children[1]);
                out.nullable = l.nullable || r.nullable;
                out.first = merged(l.first, r.first);
                out.last = merged(l.last, r.last);
                break;
            }
            case Kind::Concat: {
                NodeSets l = build(n.children[0]);
                NodeSets r = build(n.children[1]);
                out.nullable = l.nullable && r.nullable;
                out.first = l.nullable ? merged(l.first, r.first) : l.first;
                out.last = r.nullable ? merged(l.last, r.last) : r.last;
                link(l.last, r.first);
                break;
            }
            case Kind::Star: {
                NodeSets c = build(n.children[0]);
                out.nullable = true;
                out.first = c.first;
                out.last = c.last;
                link(c.last, c.first);
                break;
            }
        }
        return out;
    }

    static std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out = a;
        out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void link(const std::vector<int>& lasts, const std::vector<int>& firsts) {
        for (int p : lasts) {
            auto& f = follow[static_cast<std::size_t>(p) - 1];
            f.insert(f.end(), firsts.begin(), firsts.end());
        }
    }
};

}  // namespace detail

inline RegexAst parse_regex(std::string_view text, const Alphabet& alphabet) {
    return detail::RegexParser(text, alphabet).parse();
}

inline Nfa compile(const RegexAst& ast, const Alphabet& alphabet) {
    detail::validate_ast(ast, alphabet);
    detail::GlushkovBuilder builder;
    auto sets = builder.build(ast);

    Nfa n;
    n.alphabet = alphabet;
    n.state_count = static_cast<int>(builder.position_letter.size()) + 1;
    n.initial = {0};
    n.accepting = sets.last;
    if (sets.nullable) n.accepting.push_back(0);
    for (int p : sets.first) {
        n.transitions.push_back({0, builder.position_letter[static_cast<std::size_t>(p) - 1], p});
    }
    for (std::size_t i = 0; i < builder.follow.size(); ++i) {
        for (int q : builder.follow[i]) {
            n.transitions.push_back({static_cast<int>(i) + 1,
                                     builder.position_letter[static_cast<std::size_t>(q) - 1],
                                     q});
        }
    }
    n.normalize();
    return n;
}

inline Nfa compile_regex(std::string_view text, const Alphabet& alphabet) {
    return compile(parse_regex(text, alphabet), alphabet);
}

}  // namespace ptkit
