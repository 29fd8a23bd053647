#include "cli.hpp"

#include "locallex/examples.hpp"
#include "locallex/spec_file.hpp"
#include "locallex/workbench.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace locallex;
using testing::spec_path;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args, const std::string& stdin_text = "")
{
    args.insert(args.begin(), "llwb");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = llwb::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool same_rules(const Grammar& a, const Grammar& b)
{
    if (a.rules().size() != b.rules().size() || a.start() != b.start())
        return false;
    for (std::size_t i = 0; i < a.rules().size(); ++i)
        if (a.rule_string(i) != b.rule_string(i))
            return false;
    return true;
}

} // namespace

TEST_CASE("parse_spec: bundled H.ll is grammar H with the empty order")
{
    const LocalLexing spec = load_spec(spec_path("H.ll"));
    const LocalLexing ex = examples::grammar_H(3);
    CHECK(same_rules(spec.grammar, ex.grammar));
    CHECK(spec.selector.mode() == SelectorMode::none);
    CHECK(run_earley(spec, "a-b+c").paths == run_earley(ex, "a-b+c").paths);
}

TEST_CASE("parse_spec errors carry line numbers")
{
    const std::string head = "alphabet [ab]\nterminal a /a/\nterminal b /b/\n";
    try {
        parse_spec(head + "selector order\npriority a < b\npriority b < a\nrule S -> a\n");
        FAIL("expected a cyclic-order error");
    } catch (const SpecError& e) {
        CHECK(e.line() == 6);
        CHECK(std::string(e.what()).find("cyclic") != std::string::npos);
    }
    try {
        parse_spec(head + "rule S -> a c\n");
        FAIL("expected an undeclared-symbol error");
    } catch (const SpecError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("'c'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec(head + "rule S => a\n"), SpecError);
    CHECK_THROWS_AS(parse_spec(head + "frobnicate\n"), SpecError);
    CHECK_THROWS_AS(parse_spec("alphabet [ab]\nterminal a /c/\nrule S -> a\n"), SpecError);
    CHECK_THROWS_AS(parse_spec("terminal a /a/\nrule S -> a\n"), SpecError);
    CHECK_THROWS_AS(parse_spec(head + "rule S -> a\nstart T\n"), SpecError);
    CHECK_THROWS_AS(parse_spec(head + "rule a -> b\n"), SpecError);
}

TEST_CASE("parse_spec syntax details")
{
    const LocalLexing ll = parse_spec("# comment\n"
                                      "alphabet [ab/]   # trailing comment\n"
                                      "terminal slash /\\// all\n"
                                      "terminal e //\n"
                                      "rule S -> slash S | ε | e\n");
    CHECK(ll.grammar.rules().size() == 3);
    CHECK(ll.grammar.rule(1).rhs.empty());
    CHECK(ll.lexer.recognizer(ll.grammar.id("slash")).mode() == MatchMode::all);
    CHECK(ll.grammar.start() == ll.grammar.id("S"));
}

TEST_CASE("bundled specs match the programmatic examples")
{
    const std::vector<std::pair<std::string, LocalLexing>> pairs = {
        {"H-none.ll", examples::grammar_H(3)},        {"H-order.ll", examples::grammar_H(4)},
        {"H-longest.ll", examples::grammar_H(5)},     {"H-longest-order.ll", examples::grammar_H(6)},
        {"lexerhack.ll", examples::lexer_hack()},     {"err.ll", examples::error_recovery()},
        {"infinite.ll", examples::infinite_example()},
    };
    for (const auto& [file, ex] : pairs) {
        CAPTURE(file);
        const LocalLexing spec = load_spec(spec_path(file));
        CHECK(same_rules(spec.grammar, ex.grammar));
        CHECK(spec.selector.mode() == ex.selector.mode());
        for (SymbolId a = 0; a < ex.grammar.terminal_count(); ++a)
            for (SymbolId b = 0; b < ex.grammar.terminal_count(); ++b)
                CHECK(spec.selector.below(a, b) == ex.selector.below(a, b));
        for (const auto& [f2, inputs] : testing::bundled_examples())
            if (f2 == file)
                for (const auto& in : inputs) {
                    RunCaps caps;
                    caps.max_epsilon_iterations = 2;
                    CHECK(run_earley(spec, in, caps).paths == run_earley(ex, in, caps).paths);
                }
    }
}

TEST_CASE("CLI: tokens reproduces the eight sequences")
{
    const Run r = invoke({"tokens", spec_path("H-none.ll"), "a-b+c"});
    CHECK(r.code == 0);
    CHECK(r.out == "a-b/symbol +/plus c/id\n"
                   "a-b/symbol +/plus c/symbol\n"
                   "a/id -b/symbol +/plus c/id\n"
                   "a/id -b/symbol +/plus c/symbol\n"
                   "a/id -/minus b/id +/plus c/id\n"
                   "a/id -/minus b/id +/plus c/symbol\n"
                   "a/id -/minus b/symbol +/plus c/id\n"
                   "a/id -/minus b/symbol +/plus c/symbol\n");
    CHECK(invoke({"oracle", spec_path("H-none.ll"), "a-b+c"}).out == r.out);
    CHECK(invoke({"tokens", spec_path("H-none.ll"), "--stdin"}, "a-b+c\n").out == r.out);
}

TEST_CASE("CLI: recognize, check and exit codes")
{
    const Run acc = invoke({"recognize", spec_path("err.ll"), "2(a*+))+(1"});
    CHECK(acc.code == 0);
    CHECK(acc.out == "ACCEPT\n");
    const Run rej = invoke({"recognize", spec_path("H.ll"), "+"});
    CHECK(rej.code == 1);
    CHECK(rej.out == "REJECT\n");
    const Run chk = invoke({"check", spec_path("H.ll"), "a-b+c"});
    CHECK(chk.code == 0);
    CHECK(chk.out.find("AGREE") != std::string::npos);

    const Run dump = invoke({"recognize", spec_path("H-order.ll"), "a", "--dump-chart"});
    CHECK(dump.out.find("1\tE -> id •\t0\n") != std::string::npos);

    CHECK(invoke({}).code == 2);
    CHECK(invoke({"tokens"}).code == 2);
    CHECK(invoke({"tokens", spec_path("H.ll")}).code == 2);
    CHECK(invoke({"tokens", spec_path("H.ll"), "a", "--max-paths", "0"}).code == 2);
    CHECK(invoke({"tokens", spec_path("nope.ll"), "a"}).code == 3);
    const Run foreign = invoke({"tokens", spec_path("H.ll"), "a x"});
    CHECK(foreign.code == 3);
    CHECK(foreign.err.find("outside the alphabet") != std::string::npos);
}

TEST_CASE("CLI: truncation marker and ε output")
{
    const Run r = invoke({"tokens", spec_path("infinite.ll"), "aa", "--max-eps", "1"});
    CHECK(r.out == "aa/t1\naa/t1 ε/t1\n# TRUNCATED\n");
    const Run e = invoke({"oracle", spec_path("infinite.ll"), "", "--max-eps", "1"});
    CHECK(e.out == "ε\nε/t1\n# TRUNCATED\n");
}

TEST_CASE("CLI: forest output and determinism")
{
    const Run a = invoke({"forest", spec_path("H-order.ll"), "a-b+c"});
    const Run b = invoke({"forest", spec_path("H-order.ll"), "a-b+c", "--dot", "-"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("digraph", 0) == 0);
    const Run j = invoke({"forest", spec_path("H-order.ll"), "a-b+c", "--json", "-"});
    CHECK(j.out.rfind("{\"v\":1", 0) == 0);
    CHECK(invoke({"forest", spec_path("H.ll"), "+"}).code == 1);

    const std::string path = "llwb_forest_test.dot";
    CHECK(invoke({"forest", spec_path("H-order.ll"), "a-b+c", "--dot", path}).code == 0);
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    CHECK(s.str() == a.out);
    std::remove(path.c_str());

    for (const auto& [file, inputs] : testing::bundled_examples())
        for (const auto& in : inputs)
            for (const char* cmd : {"tokens", "oracle", "check"}) {
                CAPTURE(file);
                CAPTURE(in);
                const Run x = invoke({cmd, spec_path(file), "--max-eps", "2", "--", in});
                const Run y = invoke({cmd, spec_path(file), "--max-eps", "2", "--", in});
                CHECK(x.out == y.out);
                CHECK(x.code == y.code);
                if (std::string(cmd) == "check")
                    CHECK(x.code == 0);
            }
}
