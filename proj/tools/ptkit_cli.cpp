// Command-line front end over the JSON automaton format: compile regular
// expressions, combine automata, run queries and the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptkit/ptkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct OperandOptions {
    std::vector<std::string> files;
    std::vector<std::string> regexes;
    std::string alphabet;
};

void add_operand_options(CLI::App* cmd, OperandOptions& ops, int max_positional) {
    cmd->add_option("inputs", ops.files, "automaton JSON files")->expected(0, max_positional);
    cmd->add_option("--regex", ops.regexes, "inline regular expression operand");
    cmd->add_option("--alphabet", ops.alphabet,
                    "alphabet letters for --regex operands, e.g. \"ab\"");
}

std::vector<ptkit::Nfa> load_operands(const OperandOptions& ops, std::size_t count,
                                      const std::string& what) {
    std::vector<ptkit::Nfa> out;
    for (const std::string& path : ops.files) {
        out.push_back(ptkit::load_automaton_file(path));
    }
    if (!ops.regexes.empty()) {
        if (ops.alphabet.empty()) {
            throw ptkit::FormatError("--regex requires --alphabet");
        }
        ptkit::Alphabet alphabet(ops.alphabet);
        for (const std::string& expr : ops.regexes) {
            out.push_back(ptkit::compile_regex(expr, alphabet));
        }
    }
    if (out.size() != count) {
        throw ptkit::FormatError(what + " expects " + std::to_string(count) + " operand(s), got " +
                                 std::to_string(out.size()));
    }
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw ptkit::FormatError("cannot write '" + output_path + "'");
    out << text;
}

nlohmann::ordered_json witness_with_side(const ptkit::TrivialityReport& rep) {
    nlohmann::ordered_json w = ptkit::witness_to_json(*rep.witness);
    w["side"] = rep.witness_side == ptkit::CycleSide::Forward ? "forward" : "mirror";
    return w;
}

int run_op(const std::string& kind, const OperandOptions& ops, const std::string& share,
           const std::string& word, const std::string& letters, const std::string& output) {
    using namespace ptkit;
    bool binary = kind == "shuffle" || kind == "infiltrate" || kind == "concat" ||
                  kind == "union" || kind == "intersect" || kind == "difference";
    std::vector<Nfa> in = load_operands(ops, binary ? 2 : 1, "op " + kind);

    Nfa result;
    if (kind == "shuffle") {
        result = shuffle(in[0], in[1]);
    } else if (kind == "infiltrate") {
        result = infiltrate(in[0], in[1], ShareSet(share));
    } else if (kind == "concat") {
        result = concat(in[0], in[1]);
    } else if (kind == "union") {
        result = boolean(BoolOp::Union, in[0], in[1]);
    } else if (kind == "intersect") {
        result = boolean(BoolOp::Intersection, in[0], in[1]);
    } else if (kind == "difference") {
        result = boolean(BoolOp::Difference, in[0], in[1]);
    } else if (kind == "complement") {
        result = complement(in[0]);
    } else if (kind == "mirror") {
        result = mirror(in[0]);
    } else if (kind == "residual") {
        result = scattered_residual(in[0], word);
    } else if (kind == "upclose") {
        result = upward_closure(in[0]);
    } else if (kind == "downclose") {
        result = downward_closure(in[0]);
    } else if (kind == "erase-inverse") {
        result = erase_inverse(in[0], ShareSet(letters));
    } else {
        throw FormatError("unknown op kind '" + kind + "'");
    }
    emit(to_json_string(result), output);
    return kExitOk;
}

int run_query(const std::string& mode, const OperandOptions& ops, std::size_t cap) {
    using namespace ptkit;
    Nfa input = load_operands(ops, 1, "query " + mode)[0];
    nlohmann::ordered_json out;

    if (mode == "pt" || mode == "rtrivial" || mode == "ltrivial" || mode == "jtrivial") {
        TrivialityReport rep = analyze(input);
        bool value = mode == "pt"         ? rep.pt
                     : mode == "rtrivial" ? rep.r_trivial
                     : mode == "ltrivial" ? rep.l_trivial
                                          : rep.j_trivial;
        out[mode] = value;
        if (!value && rep.witness) out["witness"] = witness_with_side(rep);
    } else if (mode == "complexity") {
        ComplexityResult r = piecewise_complexity(input, cap);
        if (r.finite()) {
            out["h"] = *r.value;
        } else {
            out["h"] = "infinite";
        }
        if (r.violation) out["violation"] = witness_to_json(*r.violation);
    } else if (mode == "depth") {
        try {
            out["depth"] = depth(minimal_dfa(input));
        } catch (const NotAcyclicError& e) {
            out["depth"] = "undefined";
            out["witness"] = witness_to_json(Witness::cycle(e.cycle_word(), e.state()));
        }
    } else if (mode == "shuffle-ideal") {
        out["shuffle_ideal"] = is_shuffle_ideal(input);
    } else if (mode == "subword-closed") {
        out["subword_closed"] = is_subword_closed(input);
    } else {
        throw FormatError("unknown query '" + mode + "'");
    }
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, int max_states,
               std::size_t cap) {
    using namespace ptkit;
    RandomConfig cfg;
    cfg.max_states = max_states;
    cfg.profile_cap = cap;
    std::vector<CheckResult> results;
    if (suite == "catalogue") {
        results = run_catalogue(cap);
    } else if (suite == "thm1-finite" || suite == "thm1-cofinite" || suite == "thm1-ideal" ||
               suite == "lemma-P-acyclic" || suite == "bounds") {
        results = run_random(suite, trials, seed, cfg);
    } else {
        throw FormatError("unknown verify suite '" + suite + "'");
    }
    write_jsonl(std::cout, results);
    return exit_code_for(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"automata toolkit for subword orders, piecewise-testable languages and "
                 "shuffle/infiltration products"};
    app.require_subcommand(1);

    // parse
    auto* parse_cmd = app.add_subcommand("parse", "compile a regular expression to NFA JSON");
    std::string parse_regex_text, parse_alphabet, parse_output;
    parse_cmd->add_option("--regex", parse_regex_text, "regular expression")->required();
    parse_cmd->add_option("--alphabet", parse_alphabet, "alphabet letters")->required();
    parse_cmd->add_option("-o,--output", parse_output, "output path (default stdout)");

    // op
    auto* op_cmd = app.add_subcommand("op", "apply an operation and write the result");
    std::string op_kind, op_share, op_word, op_letters, op_output;
    op_cmd->add_option("kind", op_kind,
                       "shuffle|infiltrate|concat|union|intersect|difference|complement|"
                       "mirror|residual|upclose|downclose|erase-inverse")
        ->required();
    OperandOptions op_ops;
    add_operand_options(op_cmd, op_ops, 2);
    op_cmd->add_option("--share", op_share, "shared letters C for infiltrate");
    op_cmd->add_option("--word", op_word, "word argument for residual");
    op_cmd->add_option("--letters", op_letters, "erased letters for erase-inverse");
    op_cmd->add_option("-o,--output", op_output, "output path (default stdout)");

    // query
    auto* query_cmd = app.add_subcommand("query", "print a single-line JSON answer");
    std::string query_mode;
    query_cmd
        ->add_option("mode", query_mode,
                     "pt|rtrivial|ltrivial|jtrivial|complexity|depth|shuffle-ideal|"
                     "subword-closed")
        ->required();
    OperandOptions query_ops;
    add_operand_options(query_cmd, query_ops, 1);
    std::size_t query_cap = ptkit::kDefaultProfilePairCap;
    query_cmd->add_option("--cap", query_cap, "profile product pair cap");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite, print JSONL");
    std::string verify_suite;
    verify_cmd
        ->add_option("suite", verify_suite,
                     "catalogue|thm1-finite|thm1-cofinite|thm1-ideal|lemma-P-acyclic|bounds")
        ->required();
    int verify_trials = 500;
    std::uint64_t verify_seed = 42;
    int verify_max_states = 6;
    std::size_t verify_cap = ptkit::kDefaultProfilePairCap;
    verify_cmd->add_option("--trials", verify_trials, "number of trials");
    verify_cmd->add_option("--seed", verify_seed, "master seed");
    verify_cmd->add_option("--max-states", verify_max_states, "random DFA state bound");
    verify_cmd->add_option("--cap", verify_cap, "profile product pair cap");

    // eq
    auto* eq_cmd = app.add_subcommand("eq", "language equivalence of two automata");
    OperandOptions eq_ops;
    add_operand_options(eq_cmd, eq_ops, 2);

    // dot
    auto* dot_cmd = app.add_subcommand("dot", "print Graphviz DOT");
    OperandOptions dot_ops;
    add_operand_options(dot_cmd, dot_ops, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (parse_cmd->parsed()) {
            ptkit::Nfa n = ptkit::compile_regex(parse_regex_text, ptkit::Alphabet(parse_alphabet));
            emit(ptkit::to_json_string(n), parse_output);
            return kExitOk;
        }
        if (op_cmd->parsed()) {
            return run_op(op_kind, op_ops, op_share, op_word, op_letters, op_output);
        }
        if (query_cmd->parsed()) {
            return run_query(query_mode, query_ops, query_cap);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_suite, verify_trials, verify_seed, verify_max_states,
                              verify_cap);
        }
        if (eq_cmd->parsed()) {
            auto in = load_operands(eq_ops, 2, "eq");
            auto eq = ptkit::equivalent(in[0], in[1]);
            nlohmann::ordered_json out;
            out["equivalent"] = eq.equivalent;
            if (!eq.equivalent) out["witness"] = eq.witness->word;
            std::cout << out.dump() << "\n";
            return eq.equivalent ? kExitOk : kExitPropertyFailed;
        }
        if (dot_cmd->parsed()) {
            auto in = load_operands(dot_ops, 1, "dot");
            std::cout << ptkit::to_dot(in[0]);
            return kExitOk;
        }
    } catch (const ptkit::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const ptkit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ptkit::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ptkit::AlphabetMismatchError& e) {
        std::cerr << "alphabet error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
