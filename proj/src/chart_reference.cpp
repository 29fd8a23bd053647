#include "locallex/earley.hpp"

namespace locallex {

namespace {

bool next_is(const Grammar& g, const Item& item, SymbolId s)
{
    const Rule& r = g.rule(item.rule);
    return item.dot < r.rhs.size() && r.rhs[item.dot] == s;
}

} // namespace

ItemSet init_items(const Grammar& g)
{
    ItemSet out;
    for (std::size_t ri : g.rules_for(g.start()))
        out.insert(make_item(ri, 0, 0, 0));
    return out;
}

ItemSet predict(const Grammar& g, std::size_t k, const ItemSet& items)
{
    ItemSet out = items;
    for (const Item& item : items) {
        if (item.bin != k)
            continue;
        const Rule& r = g.rule(item.rule);
        if (item.dot == r.rhs.size() || !g.is_nonterminal(r.rhs[item.dot]))
            continue;
        for (std::size_t ri : g.rules_for(r.rhs[item.dot]))
            out.insert(make_item(ri, 0, k, k));
    }
    return out;
}

ItemSet complete(const Grammar& g, std::size_t k, const ItemSet& items)
{
    ItemSet out = items;
    for (const Item& done : items) {
        const Rule& m = g.rule(done.rule);
        if (done.bin != k || done.dot != m.rhs.size())
            continue;
        for (const Item& waiting : items)
            if (waiting.bin == done.origin && next_is(g, waiting, m.lhs))
                out.insert(make_item(waiting.rule, waiting.dot + 1, waiting.origin, k));
    }
    return out;
}

TokenSet tokens_op(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input,
                   const TokenSet& selected, std::size_t k, const ItemSet& items)
{
    TokenSet candidates;
    for (const Item& item : items) {
        if (item.bin != k)
            continue;
        const Rule& r = g.rule(item.rule);
        if (item.dot < r.rhs.size() && g.is_terminal(r.rhs[item.dot]))
            lexer.lex_into(r.rhs[item.dot], input, k, candidates);
    }
    return sel.select(selected, candidates);
}

ItemSet scan(const Grammar& g, const TokenSet& tokens, std::size_t k, const ItemSet& items)
{
    ItemSet out = items;
    for (const Item& item : items) {
        if (item.bin != k)
            continue;
        for (const Token& x : tokens)
            if (next_is(g, item, x.terminal))
                out.insert(make_item(item.rule, item.dot + 1, item.origin, k + x.size()));
    }
    return out;
}

ItemSet pi(const Grammar& g, std::size_t k, const TokenSet& tokens, const ItemSet& items)
{
    ItemSet cur = items;
    for (;;) {
        ItemSet next = scan(g, tokens, k, complete(g, k, predict(g, k, cur)));
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

ReferenceChart compute_chart_reference(const Grammar& g, const Lexer& lexer, const Selector& sel,
                                       std::string_view input, ChartTrace* trace)
{
    const std::size_t n = input.size();
    ReferenceChart out;
    out.tokens.resize(n + 1);
    if (trace)
        trace->positions.assign(n + 1, {});

    ItemSet current = pi(g, 0, {}, init_items(g)); // J_0^0
    for (std::size_t k = 0;; ++k) {
        TokenSet t; // T_k^0
        if (trace) {
            trace->positions[k].items.push_back(current);
            trace->positions[k].tokens.push_back(t);
        }
        for (;;) {
            TokenSet t_next = tokens_op(g, lexer, sel, input, t, k, current);
            ItemSet j_next = pi(g, k, t_next, current);
            t = std::move(t_next);
            if (trace) {
                trace->positions[k].items.push_back(j_next);
                trace->positions[k].tokens.push_back(t);
            }
            if (j_next == current)
                break;
            current = std::move(j_next);
        }
        out.tokens[k] = std::move(t);
        if (k == n)
            break;
        current = pi(g, k + 1, {}, current); // J_{k+1}^0 = π_{k+1} ∅ I_k
    }
    out.items = std::move(current);
    return out;
}

} // namespace locallex
