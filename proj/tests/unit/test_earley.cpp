#include "locallex/derivations.hpp"
#include "locallex/earley.hpp"
#include "locallex/examples.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace locallex;

namespace {

std::size_t rule_index(const Grammar& g, const std::string& text)
{
    for (std::size_t i = 0; i < g.rules().size(); ++i)
        if (g.rule_string(i) == text)
            return i;
    throw std::out_of_range("no rule " + text);
}

Item item(const Grammar& g, const std::string& rule, std::size_t dot, std::size_t i, std::size_t j)
{
    return make_item(rule_index(g, rule), dot, i, j);
}

Token tok(const Grammar& g, const char* t, std::string c) { return Token{g.id(t), std::move(c)}; }

bool is_subset(const ItemSet& a, const ItemSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

} // namespace

TEST_CASE("Init")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    CHECK(init_items(h) == ItemSet{item(h, "S -> S plus A", 0, 0, 0), item(h, "S -> S minus A", 0, 0, 0),
                                   item(h, "S -> A", 0, 0, 0)});
    const Grammar eps = Grammar::build({{"S"}, {}, {{"S", {}}}, "S"});
    CHECK(init_items(eps) == ItemSet{make_item(0, 0, 0, 0)});
}

TEST_CASE("Predict and its closure")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    const ItemSet once = predict(h, 0, init_items(h));
    CHECK(once.contains(item(h, "A -> A E", 0, 0, 0)));
    CHECK(once.contains(item(h, "A -> E", 0, 0, 0)));
    CHECK_FALSE(once.contains(item(h, "E -> id", 0, 0, 0)));
    ItemSet closure = once;
    for (ItemSet next = predict(h, 0, closure); next != closure; next = predict(h, 0, closure))
        closure = next;
    CHECK(closure.contains(item(h, "E -> id", 0, 0, 0)));
    CHECK(closure.contains(item(h, "E -> symbol", 0, 0, 0)));
    CHECK(closure.size() == 7);
    CHECK(predict(h, 0, closure) == closure);
    const ItemSet finished{item(h, "E -> id", 1, 0, 1)};
    CHECK(predict(h, 1, finished) == finished);
}

TEST_CASE("Complete")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    const ItemSet in{item(h, "E -> id", 1, 0, 1), item(h, "A -> E", 0, 0, 0)};
    const ItemSet out = complete(h, 1, in);
    CHECK(out.contains(item(h, "A -> E", 1, 0, 1)));
    CHECK(out.size() == 3);
    CHECK(complete(h, 0, in) == in);
}

TEST_CASE("Tokens and Scan")
{
    const auto h3 = examples::grammar_H(3);
    const Grammar& h = h3.grammar;
    const ItemSet start = pi(h, 0, {}, init_items(h));
    CHECK(tokens_op(h, h3.lexer, h3.selector, "a-b+c", {}, 0, start) ==
          TokenSet{tok(h, "id", "a"), tok(h, "symbol", "a-b")});
    const auto h4 = examples::grammar_H(4);
    CHECK(tokens_op(h, h4.lexer, h4.selector, "a-b+c", {}, 0, start) == TokenSet{tok(h, "id", "a")});
    const TokenSet prev{tok(h, "id", "a")};
    CHECK(tokens_op(h, h3.lexer, h3.selector, "a-b+c", prev, 0, start) ==
          TokenSet{tok(h, "id", "a"), tok(h, "symbol", "a-b")});
    CHECK_THROWS_AS(tokens_op(h, h3.lexer, h3.selector, "a-b+c", prev, 0, ItemSet{}), SelectorError);

    const ItemSet waiting{item(h, "E -> id", 0, 0, 0)};
    CHECK(scan(h, {tok(h, "id", "a")}, 0, waiting).contains(item(h, "E -> id", 1, 0, 1)));
    CHECK(scan(h, {}, 0, waiting) == waiting);

    const auto inf = examples::infinite_example();
    const Grammar& g = inf.grammar;
    const ItemSet t_waiting{item(g, "T -> t1", 0, 0, 0)};
    CHECK(scan(g, {Token{g.id("t1"), ""}}, 0, t_waiting).contains(item(g, "T -> t1", 1, 0, 0)));
}

TEST_CASE("pi")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    const ItemSet p = pi(h, 0, {}, init_items(h));
    CHECK(p.size() == 7);
    CHECK(pi(h, 0, {}, p) == p);
    const ItemSet more = pi(h, 0, {tok(h, "id", "a")}, init_items(h));
    CHECK(is_subset(p, more));
    CHECK(more.contains(item(h, "E -> id", 1, 0, 1)));
    // Completion at bin 1 belongs to the next position.
    CHECK_FALSE(more.contains(item(h, "A -> E", 1, 0, 1)));
}

TEST_CASE("compute_chart on the worked examples")
{
    const auto h3 = examples::grammar_H(3);
    const Chart c3 = compute_chart(h3.grammar, h3.lexer, h3.selector, "a-b+c");
    CHECK(c3.accepted());
    CHECK(c3.contains(item(h3.grammar, "S -> S plus A", 3, 0, 5)));
    CHECK_FALSE(recognize(h3.grammar, h3.lexer, h3.selector, "+"));

    const auto h4 = examples::grammar_H(4);
    const Chart c4 = compute_chart(h4.grammar, h4.lexer, h4.selector, "a-b+c");
    const Grammar& h = h4.grammar;
    const std::vector<TokenSet> expected = {{tok(h, "id", "a")}, {tok(h, "minus", "-")}, {tok(h, "id", "b")},
                                            {tok(h, "plus", "+")}, {tok(h, "id", "c")}};
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(c4.tokens(k) == expected[k]);
    CHECK(c4.tokens(5).empty());

    const Grammar eps = Grammar::build({{"S"}, {}, {{"S", {}}}, "S"});
    const Chart ce = compute_chart(eps, Lexer::identity(eps), Selector(), "");
    CHECK(ce.contains(make_item(0, 0, 0, 0)));
    CHECK(ce.accepted());

    const auto err = examples::error_recovery();
    CHECK(recognize(err.grammar, err.lexer, err.selector, "2(a*+))+(1"));
}

TEST_CASE("viable_prefix and in_language")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    CHECK(viable_prefix(h, {}));
    CHECK(viable_prefix(h, h.terminal_string(std::vector<std::string>{"id", "minus"})));
    CHECK_FALSE(viable_prefix(h, h.terminal_string(std::vector<std::string>{"plus"})));
    CHECK(in_language(h, h.terminal_string(std::vector<std::string>{"id", "plus", "symbol"})));
    CHECK_FALSE(in_language(h, h.terminal_string(std::vector<std::string>{"id", "plus"})));

    PrefixRecognizer rec(h);
    CHECK(rec.push(h.id("id")));
    CHECK(rec.accepts());
    CHECK(rec.push(h.id("minus")));
    CHECK_FALSE(rec.accepts());
    CHECK_FALSE(rec.push(h.id("plus")));
    rec.pop();
    CHECK(rec.depth() == 2);
    CHECK(rec.viable());
}

TEST_CASE("viable prefixes and membership against the brute-force oracles")
{
    for (const auto& d : testing::random_grammars(40, 3)) {
        CAPTURE(testing::describe(d));
        const Grammar g = Grammar::build(d);
        const auto lang = enumerate_language(g, 4);
        const auto pre = enumerate_prefix_language(g, 4);
        for (const auto& in : testing::identity_inputs(g.terminal_count(), 4)) {
            const TerminalString w(in.begin(), in.end());
            REQUIRE(viable_prefix(g, w) == pre.contains(w));
            REQUIRE(in_language(g, w) == lang.contains(w));
            PrefixRecognizer rec(g);
            bool ok = true;
            for (SymbolId t : w)
                ok = rec.push(t) && ok;
            REQUIRE(ok == pre.contains(w));
            if (ok)
                REQUIRE(rec.accepts() == lang.contains(w));
        }
    }
}

TEST_CASE("worklist chart equals the literal operator chain; chains are monotone")
{
    auto check_case = [](const LocalLexing& ll, const std::string& in) {
        CAPTURE(testing::show_input(in));
        ChartTrace trace;
        const ReferenceChart ref = compute_chart_reference(ll.grammar, ll.lexer, ll.selector, in, &trace);
        const Chart fast = compute_chart(ll.grammar, ll.lexer, ll.selector, in);
        REQUIRE(ref.items == fast.items());
        for (std::size_t k = 0; k <= in.size(); ++k)
            REQUIRE(ref.tokens[k] == fast.tokens(k));
        REQUIRE(fast.size() <= item_bound(ll.grammar, in.size()));

        for (std::size_t k = 0; k <= in.size(); ++k) {
            const auto& pos = trace.positions[k];
            for (std::size_t u = 0; u + 1 < pos.items.size(); ++u) {
                REQUIRE(is_subset(pos.items[u], pos.items[u + 1]));
                REQUIRE(is_subset(pos.tokens[u], pos.tokens[u + 1]));
            }
            if (k + 1 <= in.size())
                REQUIRE(is_subset(pos.items.back(), trace.positions[k + 1].items.front()));
            // Early stop: without empty tokens in T_k^1 the second round adds nothing.
            const bool empty_token =
                std::any_of(pos.tokens[1].begin(), pos.tokens[1].end(), [](const Token& t) { return t.empty(); });
            if (!empty_token)
                REQUIRE(pos.items[1] == pos.items.back());
        }
    };
    for (const auto& d : testing::random_grammars(40, 21)) {
        const LocalLexing ll = testing::identity_lexing(d);
        for (const auto& in : testing::identity_inputs(ll.grammar.terminal_count(), 3))
            check_case(ll, in);
    }
    for (const auto& d : testing::random_lexical_configs(60, 22)) {
        CAPTURE(testing::describe(d));
        const LocalLexing ll = build_local_lexing(d);
        for (const auto& in : testing::all_strings("ab", 4))
            check_case(ll, in);
    }
    for (int v : {3, 4, 5, 6})
        check_case(examples::grammar_H(v), "a-b+c");
    check_case(examples::lexer_hack(), "(a)*b");
    check_case(examples::error_recovery(), "2(a*+))+(1");
    check_case(examples::infinite_example(), "aa");
}

TEST_CASE("item bound formula")
{
    const Grammar& h = examples::grammar_H(3).grammar;
    // Σ(1 + |α|) = 4 + 4 + 2 + 3 + 2 + 2 + 2 = 19; n = 5 gives C(6, 2) + 6 = 21.
    CHECK(item_bound(h, 5) == 21 * 19);
    CHECK(item_bound(h, 0) == 19);
}

TEST_CASE("chart dump format")
{
    const auto ll = examples::grammar_H(4);
    const Chart c = compute_chart(ll.grammar, ll.lexer, ll.selector, "a");
    const std::string dump = dump_chart(ll.grammar, c);
    CHECK(dump.find("0\tS -> • S plus A\t0\n") != std::string::npos);
    CHECK(dump.find("1\tE -> id •\t0\n") != std::string::npos);
    CHECK(dump.find("0\tid\t\"a\"\n") != std::string::npos);
    CHECK(dump == dump_chart(ll.grammar, compute_chart(ll.grammar, ll.lexer, ll.selector, "a")));
}

TEST_CASE("extract_ll on the worked examples")
{
    const auto h3 = examples::grammar_H(3);
    CHECK(extract_ll(compute_chart(h3.grammar, h3.lexer, h3.selector, "a-b+c"), h3.grammar).paths.size() == 8);

    const auto c = examples::lexer_hack();
    const auto ex = extract_ll(compute_chart(c.grammar, c.lexer, c.selector, "(a)*b"), c.grammar);
    CHECK_FALSE(ex.truncated);
    CHECK(ex.paths.size() == 2);

    const auto inf = examples::infinite_example();
    ExtractCaps caps;
    caps.max_epsilon_iterations = 2;
    const auto ei = extract_ll(compute_chart(inf.grammar, inf.lexer, inf.selector, "aa"), inf.grammar, caps);
    CHECK(ei.truncated);
    CHECK(ei.paths.size() == 3);

    caps.max_results = 1;
    CHECK(extract_ll(compute_chart(h3.grammar, h3.lexer, h3.selector, "a-b+c"), h3.grammar, caps).truncated);
}
