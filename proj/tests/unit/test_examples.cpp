#include "locallex/derivations.hpp"
#include "locallex/examples.hpp"
#include "locallex/workbench.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace locallex;

namespace {

Token tok(const Grammar& g, const char* t, std::string c) { return Token{g.id(t), std::move(c)}; }

bool has_error_token(const Grammar& g, const Path& p)
{
    for (const Token& x : p)
        if (g.name(x.terminal).rfind("e-", 0) == 0)
            return true;
    return false;
}

} // namespace

TEST_CASE("traditional lexing gives at most one token sequence")
{
    const auto ll = examples::traditional("[a-z0-9]", {{"[a-z][a-z0-9]*", "ident"}, {"[0-9]+", "number"}, {"if", "kw"}});
    const Grammar& g = ll.grammar;
    CHECK(run_earley(ll, "if").paths == PathSet{{tok(g, "kw", "if")}});
    CHECK(run_earley(ll, "iff").paths == PathSet{{tok(g, "ident", "iff")}});
    CHECK(run_earley(ll, "").paths == PathSet{Path{}});
    const auto unmatched = examples::traditional("[a-z0-9]", {{"[a-z]+", "word"}});
    CHECK(run_earley(unmatched, "ab1").paths.empty());
    for (const auto& in : testing::all_strings("a1f", 4)) {
        const auto r = run_oracle(ll, in);
        CHECK(r.paths.size() <= 1);
        CHECK_FALSE(r.truncated);
    }
}

TEST_CASE("infinite example: truncation by the ε cap")
{
    const auto ll = examples::infinite_example();
    const Grammar& g = ll.grammar;
    const Token aa = tok(g, "t1", "aa"), e = tok(g, "t1", "");
    RunCaps caps;
    caps.max_epsilon_iterations = 1;
    CHECK(run_oracle(ll, "aa", caps).paths == PathSet{{aa}, {aa, e}});
    caps.max_epsilon_iterations = 0;
    CHECK(run_oracle(ll, "aa", caps).paths == PathSet{{aa}});
    caps.max_epsilon_iterations = 1;
    CHECK(run_oracle(ll, "", caps).paths == PathSet{Path{}, Path{e}});
}

TEST_CASE("grammar H variants")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    CHECK(run_oracle(examples::grammar_H(3), "a-b+c").paths.size() == 8);
    CHECK(run_oracle(examples::grammar_H(5), "a-b+c").paths ==
          PathSet{{tok(h, "symbol", "a-b"), tok(h, "plus", "+"), tok(h, "id", "c")},
                  {tok(h, "symbol", "a-b"), tok(h, "plus", "+"), tok(h, "symbol", "c")}});
    CHECK(run_oracle(examples::grammar_H(6), "a-b+c").paths ==
          PathSet{{tok(h, "symbol", "a-b"), tok(h, "plus", "+"), tok(h, "id", "c")}});
    CHECK_THROWS_AS(examples::grammar_H(7), std::invalid_argument);
}

TEST_CASE("lexer hack")
{
    const auto ll = examples::lexer_hack();
    const Grammar& g = ll.grammar;
    CHECK(run_earley(ll, "(a)*b").paths ==
          PathSet{{tok(g, "left", "("), tok(g, "id", "a"), tok(g, "right", ")"), tok(g, "asterisk", "*"),
                   tok(g, "id", "b")},
                  {tok(g, "left", "("), tok(g, "typeid", "a"), tok(g, "right", ")"), tok(g, "asterisk", "*"),
                   tok(g, "id", "b")}});
    CHECK(run_earley(ll, "*b").accepted);
    CHECK_FALSE(run_earley(ll, "()").accepted);
    CHECK_FALSE(enumerate_language(g, 2).contains(g.terminal_string(std::vector<std::string>{"left", "right"})));
}

TEST_CASE("error recovery")
{
    const auto ll = examples::error_recovery();
    const Grammar& g = ll.grammar;
    const Path displayed = {tok(g, "num", "2"),       tok(g, "left", "("),  tok(g, "id", "a"),
                            tok(g, "mul", "*"),       tok(g, "e-atom", ""), tok(g, "plus", "+"),
                            tok(g, "e-atom", ""),     tok(g, "right", ")"), tok(g, "e-superfluous", ")"),
                            tok(g, "plus", "+"),      tok(g, "left", "("),  tok(g, "num", "1"),
                            tok(g, "e-right", "")};
    const auto r = run_earley(ll, "2(a*+))+(1");
    CHECK(r.accepted);
    CHECK(r.paths.contains(displayed));

    // ℓℓ("1+2*3") holds one path free of error tokens; the juxtaposition rule
    // Mul -> Mul Atom with Atom -> e-atom also admits trailing empty atoms, so
    // the set is infinite and every other member carries e-atom tokens.
    const Path clean = {tok(g, "num", "1"), tok(g, "plus", "+"), tok(g, "num", "2"), tok(g, "mul", "*"),
                        tok(g, "num", "3")};
    RunCaps caps;
    caps.max_epsilon_iterations = 2;
    const auto o = run_oracle(ll, "1+2*3", caps);
    CHECK(o.truncated);
    CHECK(o.paths.size() == 3);
    PathSet error_free;
    for (const Path& p : o.paths)
        if (!has_error_token(g, p))
            error_free.insert(p);
    CHECK(error_free == PathSet{clean});
    CHECK(run_earley(ll, "1+2*3", caps).paths == o.paths);
}

TEST_CASE("example grammars validate and are productive")
{
    for (const auto& d : {examples::grammar_H_decl(3), examples::lexer_hack_decl(), examples::error_recovery_decl(),
                          examples::infinite_decl()}) {
        const auto ll = build_local_lexing(d);
        CHECK(unproductive_nonterminals(ll.grammar).empty());
    }
}
