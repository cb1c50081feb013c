// End-to-end exercise of the command-line tool: argv grammar, exit codes,
// JSON piping between subcommands and byte-determinism of the outputs.
// argv[1] is the path to the built binary.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

#define EXPECT(cond, what)                                              \
    do {                                                                \
        if (!(cond)) {                                                  \
            ++failures;                                                 \
            std::cerr << "FAILED: " << what << " at line " << __LINE__ \
                      << "\n";                                          \
        }                                                               \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        r.output.append(buffer, got);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_roundtrip <path-to-ptkit>\n";
        return 1;
    }
    const std::string cli = argv[1];

    char tmpl[] = "/tmp/ptkit-cli-XXXXXX";
    const char* dir = mkdtemp(tmpl);
    if (!dir) {
        std::cerr << "mkdtemp failed\n";
        return 1;
    }
    const std::string marked = std::string(dir) + "/marked.json";
    const std::string other = std::string(dir) + "/other.json";

    // parse writes a file
    {
        auto r = run(cli + " parse --regex '(a|b)*a' --alphabet ab -o " + marked);
        EXPECT(r.exit_code == 0, "parse exit code");
    }
    // byte-determinism of repeated runs
    {
        auto first = run(cli + " parse --regex '(a|b)*a' --alphabet ab");
        auto second = run(cli + " parse --regex '(a|b)*a' --alphabet ab");
        EXPECT(first.exit_code == 0, "parse to stdout");
        EXPECT(first.output == second.output, "parse output is byte-identical");
        EXPECT(!first.output.empty() && first.output.back() == '\n', "newline-terminated");
    }
    // op output feeds other subcommands
    {
        auto r = run(cli + " op complement " + marked + " -o " + other);
        EXPECT(r.exit_code == 0, "op complement exit code");
        auto q = run(cli + " query pt " + other);
        EXPECT(q.exit_code == 0, "query pt on op output");
    }
    // query pt: answered queries exit 0 even when the property is false
    {
        auto r = run(cli + " query pt " + marked);
        EXPECT(r.exit_code == 0, "query pt exit code");
        auto j = nlohmann::json::parse(r.output);
        EXPECT(j["pt"] == false, "query pt verdict");
        EXPECT(j.contains("witness"), "query pt witness");
        EXPECT(j["witness"]["kind"] == "cycle-word", "witness kind");
    }
    // query complexity: infinite is a string
    {
        auto r = run(cli + " query complexity " + marked);
        EXPECT(r.exit_code == 0, "query complexity exit code");
        auto j = nlohmann::json::parse(r.output);
        EXPECT(j["h"] == "infinite", "complexity of a non-PT language");

        auto f = run(cli + " query complexity --regex '(~|b)ab*' --alphabet ab");
        EXPECT(f.exit_code == 0, "query complexity inline regex");
        auto jf = nlohmann::json::parse(f.output);
        EXPECT(jf["h"].is_number_integer(), "finite complexity is a number");
    }
    // query depth: undefined on cyclic canonical DFAs, still exit 0
    {
        auto r = run(cli + " query depth " + marked);
        EXPECT(r.exit_code == 0, "query depth exit code");
        auto j = nlohmann::json::parse(r.output);
        EXPECT(j["depth"] == "undefined", "depth undefined on a cyclic DFA");

        // the canonical DFA of the filter of "ab" is the three-state chain
        auto fine = run(cli + " query depth --regex '(a|b)*a(a|b)*b(a|b)*' --alphabet ab");
        auto jf = nlohmann::json::parse(fine.output);
        EXPECT(jf["depth"] == 2, "depth of the filter chain");
    }
    // eq: difference exits 1 with a witness, equal exits 0
    {
        auto same = run(cli + " eq " + marked + " " + marked);
        EXPECT(same.exit_code == 0, "eq same exit code");
        EXPECT(nlohmann::json::parse(same.output)["equivalent"] == true, "eq same verdict");

        auto diff = run(cli + " eq " + marked + " --regex 'a*' --alphabet ab");
        EXPECT(diff.exit_code == 1, "eq difference exit code");
        auto j = nlohmann::json::parse(diff.output);
        EXPECT(j["equivalent"] == false, "eq difference verdict");
        EXPECT(j.contains("witness"), "eq difference witness");
    }
    // the paper-adjacent equivalence through op shuffle
    {
        auto l = run(cli + " parse --regex 'a*' --alphabet ab -o " + std::string(dir) +
                     "/astar.json");
        auto r2 = run(cli + " parse --regex 'ab*' --alphabet ab -o " + std::string(dir) +
                      "/abstar.json");
        EXPECT(l.exit_code == 0 && r2.exit_code == 0, "parse the shuffle operands");
        auto shuf = run(cli + " op shuffle " + std::string(dir) + "/astar.json " +
                        std::string(dir) + "/abstar.json -o " + std::string(dir) + "/shuf.json");
        EXPECT(shuf.exit_code == 0, "op shuffle exit code");
        auto eq = run(cli + " eq " + std::string(dir) + "/shuf.json --regex 'a(a|b)*' --alphabet ab");
        EXPECT(eq.exit_code == 0, "a* shuffle ab* equals a(a|b)*");
    }
    // infiltrate with a share set, residual, erase-inverse flags
    {
        auto r = run(cli + " op infiltrate --regex 'a' --regex 'a' --alphabet a --share a");
        EXPECT(r.exit_code == 0, "op infiltrate exit code");
        auto j = nlohmann::json::parse(r.output);
        EXPECT(j.contains("transitions"), "infiltrate output is an automaton");

        auto res = run(cli + " op residual --regex 'ac(a|b)*' --alphabet abc --word c -o " +
                       std::string(dir) + "/res.json");
        EXPECT(res.exit_code == 0, "op residual exit code");
        auto eq = run(cli + " eq " + std::string(dir) + "/res.json --regex 'a(a|b)*' --alphabet abc");
        EXPECT(eq.exit_code == 0, "residual identity through the CLI");

        auto erased = run(cli + " op erase-inverse --regex 'a' --alphabet ab --letters b");
        EXPECT(erased.exit_code == 0, "op erase-inverse exit code");
    }
    // other queries
    {
        auto ideal = run(cli + " query shuffle-ideal --regex '(a|b)*a(a|b)*' --alphabet ab");
        EXPECT(nlohmann::json::parse(ideal.output)["shuffle_ideal"] == true, "filter is an ideal");
        auto closed = run(cli + " query subword-closed --regex 'a*' --alphabet ab");
        EXPECT(nlohmann::json::parse(closed.output)["subword_closed"] == true, "a* is closed");
        auto rtriv = run(cli + " query rtrivial " + marked);
        EXPECT(nlohmann::json::parse(rtriv.output)["rtrivial"] == false, "rtrivial verdict");
    }
    // dot export
    {
        auto r = run(cli + " dot " + marked);
        EXPECT(r.exit_code == 0, "dot exit code");
        EXPECT(r.output.find("digraph automaton {") != std::string::npos, "dot header");
        EXPECT(r.output.find("doublecircle") != std::string::npos, "dot accepting shape");
    }
    // verify: JSONL report, deterministic modulo timing
    {
        auto r = run(cli + " verify lemma-P-acyclic --trials 5 --seed 7");
        EXPECT(r.exit_code == 0, "verify exit code");
        int lines = 0;
        std::istringstream stream(r.output);
        std::string line;
        while (std::getline(stream, line)) {
            auto j = nlohmann::json::parse(line);
            EXPECT(j["status"] == "pass", "verify line status");
            EXPECT(j.contains("seed") && j.contains("elapsed_ms"), "verify line fields");
            ++lines;
        }
        EXPECT(lines == 5, "verify line count");

        auto again = run(cli + " verify lemma-P-acyclic --trials 5 --seed 7");
        auto strip_elapsed = [](const std::string& text) {
            std::string kept;
            std::istringstream s(text);
            std::string l;
            while (std::getline(s, l)) {
                auto j = nlohmann::json::parse(l);
                j.erase("elapsed_ms");
                kept += j.dump();
                kept += "\n";
            }
            return kept;
        };
        EXPECT(strip_elapsed(r.output) == strip_elapsed(again.output),
               "verify reports are deterministic up to timing");
    }
    // usage and format errors exit 2
    {
        EXPECT(run(cli + " bogus").exit_code == 2, "unknown subcommand");
        EXPECT(run(cli + " parse --regex 'a(' --alphabet a").exit_code == 2, "regex parse error");
        EXPECT(run(cli + " query pt /nonexistent.json").exit_code == 2, "missing file");
        EXPECT(run(cli + " op shuffle " + marked).exit_code == 2, "missing operand");
        EXPECT(run(cli + " query pt --regex 'a*'").exit_code == 2, "regex without alphabet");
        const std::string bad = std::string(dir) + "/bad.json";
        {
            FILE* f = fopen(bad.c_str(), "w");
            fputs("{\"alphabet\": [\"a\"]}", f);
            fclose(f);
        }
        EXPECT(run(cli + " query pt " + bad).exit_code == 2, "malformed document");
    }
    // resource limit exits 3
    {
        auto r = run(cli + " query complexity --regex '(a|b)*a(a|b)*a(a|b)*' --alphabet ab --cap 4");
        EXPECT(r.exit_code == 3, "resource limit exit code");
    }

    if (failures == 0) {
        std::cout << "cli roundtrip: all checks passed\n";
    } else {
        std::cout << "cli roundtrip: " << failures << " checks failed\n";
    }
    return failures == 0 ? 0 : 1;
}
