#include "locallex/examples.hpp"
#include "locallex/lexer.hpp"
#include "locallex/pattern.hpp"
#include "locallex/selector.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <random>

using namespace locallex;

namespace {

CharSet chars(std::string_view s)
{
    CharSet c;
    for (char ch : s)
        c.set(static_cast<unsigned char>(ch));
    return c;
}

std::vector<std::size_t> lengths(const TerminalRecognizer& r, std::string_view in, std::size_t k)
{
    std::vector<std::size_t> out;
    r.match_lengths(in, k, out);
    return out;
}

Token tok(const Grammar& g, const char* terminal, std::string chars)
{
    return Token{g.id(terminal), std::move(chars)};
}

} // namespace

TEST_CASE("compile_pattern examples")
{
    const CharSet az = parse_char_class("[a-z+-]");
    CHECK(lengths(compile_pattern(parse_pattern("[a-z]+", az), az), "abc", 0) == std::vector<std::size_t>{3});
    CHECK(lengths(compile_pattern(parse_pattern("", az), az), "abc", 1) == std::vector<std::size_t>{0});
    CHECK(lengths(compile_pattern(parse_pattern("[a-z-]+", az), az), "a-b+c", 0) == std::vector<std::size_t>{3});
    CHECK(lengths(compile_pattern(parse_pattern("a*", az), az, MatchMode::all), "aab", 0) ==
          std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(compile_pattern(Pattern::literal('Z'), az), PatternError);
    CHECK_THROWS_AS(parse_pattern("Z", az), PatternError);
    CHECK_THROWS_AS(parse_pattern("[^a-z+-]", az), PatternError); // empty after negation
    CHECK_THROWS_AS(parse_pattern("(ab", az), PatternError);
}

TEST_CASE("DFA agrees with the pattern interpreter on all strings up to length 6")
{
    const CharSet sigma = chars("ab-");
    const std::vector<std::string> sources = {"",       "a",       "a*",    "(ab)+",  "a|b*",   "[ab]+-?",
                                              "[^a]*",  "(a|ab)b", "a?b?-", "((a))*", "-|a(-b)*", "b+a*"};
    const auto inputs = testing::all_strings("ab-", 6);
    for (const auto& src : sources) {
        CAPTURE(src);
        const Pattern p = parse_pattern(src, sigma);
        const Dfa dfa = build_dfa(p, sigma);
        for (const auto& s : inputs)
            REQUIRE(dfa.accepts(s) == pattern_matches(p, s));
        CHECK(p.nullable() == dfa.accepts(""));
    }
}

TEST_CASE("Lex for grammar H on a-b+c")
{
    const auto ll = examples::grammar_H(3);
    const Grammar& g = ll.grammar;
    CHECK(ll.lexer.lex(g.id("symbol"), "a-b+c", 0) == TokenSet{tok(g, "symbol", "a-b")});
    CHECK(ll.lexer.lex(g.id("plus"), "a-b+c", 3) == TokenSet{tok(g, "plus", "+")});
    CHECK(ll.lexer.lex(g.id("id"), "a-b+c", 1).empty());
    CHECK(ll.lexer.tokens_at("a-b+c", 0) == TokenSet{tok(g, "id", "a"), tok(g, "symbol", "a-b")});
    CHECK(ll.lexer.tokens_at("a-b+c", 1) == TokenSet{tok(g, "minus", "-"), tok(g, "symbol", "-b")});
    CHECK(ll.lexer.tokens_at("a-b+c", 5).empty());
    CHECK_THROWS_AS(ll.lexer.lex(g.id("id"), "a-b+c", 6), LexError);
    CHECK_THROWS_AS(ll.lexer.lex(99, "a-b+c", 0), LexError);
    CHECK(ll.lexer.first_foreign_char("ab?c") == std::optional<std::size_t>{2});
}

TEST_CASE("select examples")
{
    const auto h3 = examples::grammar_H(3);
    const Grammar& g = h3.grammar;
    const TokenSet b{tok(g, "id", "a"), tok(g, "symbol", "a-b")};
    CHECK(h3.selector.select({}, b) == b);
    CHECK(h3.selector.select({tok(g, "id", "a")}, b) == b);

    const auto h4 = examples::grammar_H(4);
    CHECK(h4.selector.select({}, {tok(g, "id", "a"), tok(g, "symbol", "a")}) == TokenSet{tok(g, "id", "a")});
    // The order ignores lengths: symbol over a-b is still dominated by id over a.
    CHECK(h4.selector.select({}, b) == TokenSet{tok(g, "id", "a")});

    const auto h5 = examples::grammar_H(5);
    CHECK(h5.selector.select({}, b) == TokenSet{tok(g, "symbol", "a-b")});

    const auto h6 = examples::grammar_H(6);
    CHECK(h6.selector.select({}, {tok(g, "id", "c"), tok(g, "symbol", "c")}) == TokenSet{tok(g, "id", "c")});

    CHECK_THROWS_AS(h3.selector.select({tok(g, "plus", "+")}, b), SelectorError);
}

TEST_CASE("traditional_selector")
{
    const auto ll = examples::traditional("[a-z]", {{"[a-z]+", "word"}, {"if", "kw"}});
    const Grammar& g = ll.grammar;
    // Equal lengths: the later pair wins.
    CHECK(ll.selector.select({}, {tok(g, "word", "if"), tok(g, "kw", "if")}) == TokenSet{tok(g, "kw", "if")});
    CHECK(ll.selector.select({}, {tok(g, "word", "iff")}) == TokenSet{tok(g, "word", "iff")});
    // Longer beats priority.
    CHECK(ll.selector.select({}, {tok(g, "kw", "if"), tok(g, "word", "iff")}) == TokenSet{tok(g, "word", "iff")});

    const SymbolId word = g.id("word");
    const std::vector<SymbolId> dup{word, word};
    CHECK_THROWS_AS(traditional_selector(g, dup), SelectorError);
    const std::vector<SymbolId> partial{word};
    CHECK_THROWS_AS(traditional_selector(g, partial), SelectorError);
    CHECK_THROWS_AS(examples::traditional("[a]", {{"a*", "t"}}), std::invalid_argument);
}

TEST_CASE("priority order: closure, wildcards and cycles")
{
    const auto ll = examples::error_recovery();
    const Grammar& g = ll.grammar;
    const SymbolId atom = g.id("e-atom"), right = g.id("e-right"), sup = g.id("e-superfluous");
    CHECK(ll.selector.below(atom, right));
    CHECK(ll.selector.below(atom, sup));
    CHECK(ll.selector.below(right, sup));
    CHECK_FALSE(ll.selector.below(sup, right));
    for (const char* t : {"plus", "mul", "id", "num", "left", "right"}) {
        CHECK(ll.selector.below(sup, g.id(t)));
        CHECK_FALSE(ll.selector.below(g.id(t), atom));
    }

    const Grammar& h = examples::grammar_H(3).grammar;
    const std::vector<OrderEdge> transitive{{h.id("plus"), h.id("minus")}, {h.id("minus"), h.id("id")}};
    CHECK(Selector(h, SelectorMode::order, transitive).below(h.id("plus"), h.id("id")));
    const std::vector<OrderEdge> cyclic{{h.id("plus"), h.id("minus")}, {h.id("minus"), h.id("plus")}};
    CHECK_THROWS_AS(Selector(h, SelectorMode::order, cyclic), SelectorError);
    const std::vector<OrderEdge> self{{h.id("plus"), h.id("plus")}};
    CHECK_THROWS_AS(Selector(h, SelectorMode::order, self), SelectorError);
}

TEST_CASE("selector and Lex contracts under fuzzing")
{
    std::mt19937_64 rng(11);
    const auto configs = testing::random_lexical_configs(40, 5);
    const auto inputs = testing::all_strings("ab", 4);
    for (const auto& d : configs) {
        const LocalLexing ll = build_local_lexing(d);
        for (int round = 0; round < 25; ++round) {
            const std::string& in = inputs[rng() % inputs.size()];
            const std::size_t k = rng() % (in.size() + 1);
            const TokenSet b = ll.lexer.tokens_at(in, k);
            for (const Token& x : b)
                REQUIRE(in.compare(k, x.size(), x.chars) == 0);
            TokenSet a;
            for (const Token& x : b)
                if (rng() % 2)
                    a.insert(x);
            const TokenSet s = ll.selector.select(a, b);
            REQUIRE(is_subset(a, s));
            REQUIRE(is_subset(s, b));
        }
    }
}
