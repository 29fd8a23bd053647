#include "locallex/derivations.hpp"

#include <algorithm>
#include <functional>

namespace locallex {

namespace {

TerminalString concat(const TerminalString& a, const TerminalString& b)
{
    TerminalString out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

BoundedLanguages::BoundedLanguages(const Grammar& g, std::size_t max_length, std::size_t node_budget)
    : grammar_(&g), max_length_(max_length), language_(g.symbol_count()), prefixes_(g.symbol_count())
{
    std::size_t nodes = 0;
    auto charge = [&](std::size_t n) {
        nodes += n;
        if (nodes > node_budget)
            throw ResourceLimit("derivation oracle exceeded its node budget of " +
                                std::to_string(node_budget));
    };

    for (SymbolId t : g.terminals())
        if (max_length >= 1)
            language_[t].emplace(TerminalString{t}, Witness{Derivation::leaf, {}});

    // Truncated languages: least fixpoint of concatenation over each rule.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t ri = 0; ri < g.rules().size(); ++ri) {
            const Rule& r = g.rule(ri);
            std::vector<std::pair<TerminalString, std::vector<TerminalString>>> fresh;
            std::vector<TerminalString> parts;
            std::function<void(std::size_t, const TerminalString&)> extend =
                [&](std::size_t i, const TerminalString& acc) {
                    if (i == r.rhs.size()) {
                        if (!language_[r.lhs].contains(acc))
                            fresh.emplace_back(acc, parts);
                        return;
                    }
                    for (const auto& [w, _] : language_[r.rhs[i]]) {
                        if (acc.size() + w.size() > max_length)
                            continue;
                        parts.push_back(w);
                        extend(i + 1, concat(acc, w));
                        parts.pop_back();
                    }
                };
            extend(0, {});
            for (auto& [w, ps] : fresh) {
                if (language_[r.lhs].emplace(std::move(w), Witness{ri, std::move(ps)}).second) {
                    charge(1);
                    changed = true;
                }
            }
        }
    }

    // Prefix languages.
    for (SymbolId s = 0; s < g.symbol_count(); ++s) {
        prefixes_[s].insert(TerminalString{});
        for (const auto& [w, _] : language_[s])
            prefixes_[s].insert(w);
    }
    charge(g.symbol_count());
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : g.rules()) {
            std::vector<TerminalString> fresh;
            std::function<void(std::size_t, const TerminalString&)> extend =
                [&](std::size_t i, const TerminalString& acc) {
                    if (i == r.rhs.size())
                        return;
                    for (const auto& p : prefixes_[r.rhs[i]]) {
                        if (acc.size() + p.size() <= max_length && !prefixes_[r.lhs].contains(concat(acc, p)))
                            fresh.push_back(concat(acc, p));
                    }
                    for (const auto& [w, _] : language_[r.rhs[i]])
                        if (acc.size() + w.size() <= max_length)
                            extend(i + 1, concat(acc, w));
                };
            extend(0, {});
            for (auto& w : fresh)
                if (prefixes_[r.lhs].insert(std::move(w)).second) {
                    charge(1);
                    changed = true;
                }
        }
    }

    // Left contexts reachable from the start symbol.
    std::vector<std::pair<TerminalString, SymbolId>> work{{TerminalString{}, g.start()}};
    left_contexts_.insert(work.front());
    while (!work.empty()) {
        auto [w, x] = std::move(work.back());
        work.pop_back();
        for (std::size_t ri : g.rules_for(x)) {
            const Rule& r = g.rule(ri);
            std::function<void(std::size_t, const TerminalString&)> extend =
                [&](std::size_t i, const TerminalString& acc) {
                    if (i == r.rhs.size())
                        return;
                    if (g.is_nonterminal(r.rhs[i])) {
                        std::pair<TerminalString, SymbolId> ctx{acc, r.rhs[i]};
                        if (left_contexts_.insert(ctx).second) {
                            charge(1);
                            work.push_back(std::move(ctx));
                        }
                    }
                    for (const auto& [v, _] : language_[r.rhs[i]])
                        if (acc.size() + v.size() <= max_length)
                            extend(i + 1, concat(acc, v));
                };
            extend(0, w);
        }
    }
}

std::set<TerminalString> BoundedLanguages::language(SymbolId symbol) const
{
    std::set<TerminalString> out;
    for (const auto& [w, _] : language_.at(symbol))
        out.insert(w);
    return out;
}

const std::set<TerminalString>& BoundedLanguages::prefixes(SymbolId symbol) const
{
    return prefixes_.at(symbol);
}

bool BoundedLanguages::derives(SymbolId symbol, const TerminalString& w) const
{
    if (w.size() > max_length_)
        throw std::invalid_argument("string longer than the oracle bound");
    return language_.at(symbol).contains(w);
}

bool BoundedLanguages::derives(std::span<const SymbolId> alpha, const TerminalString& w) const
{
    if (w.size() > max_length_)
        throw std::invalid_argument("string longer than the oracle bound");
    std::vector<bool> reach(w.size() + 1, false);
    reach[0] = true;
    for (SymbolId s : alpha) {
        std::vector<bool> next(w.size() + 1, false);
        for (std::size_t p = 0; p <= w.size(); ++p) {
            if (!reach[p])
                continue;
            for (std::size_t q = p; q <= w.size(); ++q)
                if (!next[q] && language_.at(s).contains(TerminalString(w.begin() + p, w.begin() + q)))
                    next[q] = true;
        }
        reach = std::move(next);
    }
    return reach[w.size()];
}

Derivation BoundedLanguages::derivation(SymbolId symbol, const TerminalString& w) const
{
    const Witness& wit = language_.at(symbol).at(w);
    Derivation d{symbol, wit.rule, {}};
    if (wit.rule == Derivation::leaf)
        return d;
    const Rule& r = grammar_->rule(wit.rule);
    for (std::size_t i = 0; i < r.rhs.size(); ++i)
        d.children.push_back(derivation(r.rhs[i], wit.parts[i]));
    return d;
}

TerminalString replay(const Grammar& g, const Derivation& d)
{
    std::vector<const Derivation*> form{&d};
    for (;;) {
        auto it = std::ranges::find_if(form, [&](const Derivation* n) { return g.is_nonterminal(n->symbol); });
        if (it == form.end())
            break;
        const Derivation* n = *it;
        if (n->rule == Derivation::leaf || n->rule >= g.rules().size())
            throw std::logic_error("nonterminal without a rule in derivation");
        const Rule& r = g.rule(n->rule);
        if (r.lhs != n->symbol || r.rhs.size() != n->children.size())
            throw std::logic_error("derivation step does not match rule " + g.rule_string(n->rule));
        for (std::size_t i = 0; i < r.rhs.size(); ++i)
            if (n->children[i].symbol != r.rhs[i])
                throw std::logic_error("derivation step does not match rule " + g.rule_string(n->rule));
        std::vector<const Derivation*> repl;
        for (const auto& c : n->children)
            repl.push_back(&c);
        it = form.erase(it);
        form.insert(it, repl.begin(), repl.end());
    }
    TerminalString w;
    for (const Derivation* n : form)
        w.push_back(n->symbol);
    return w;
}

std::set<TerminalString> enumerate_language(const Grammar& g, std::size_t max_length, std::size_t node_budget)
{
    return BoundedLanguages(g, max_length, node_budget).language(g.start());
}

std::set<TerminalString> enumerate_prefix_language(const Grammar& g, std::size_t max_length,
                                                   std::size_t node_budget)
{
    return BoundedLanguages(g, max_length, node_budget).prefixes(g.start());
}

std::set<SymbolId> unproductive_nonterminals(const Grammar& g)
{
    std::vector<bool> productive(g.symbol_count(), false);
    for (SymbolId t : g.terminals())
        productive[t] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Rule& r : g.rules()) {
            if (productive[r.lhs])
                continue;
            if (std::ranges::all_of(r.rhs, [&](SymbolId s) { return productive[s]; })) {
                productive[r.lhs] = true;
                changed = true;
            }
        }
    }
    std::set<SymbolId> out;
    for (SymbolId n : g.nonterminals())
        if (!productive[n])
            out.insert(n);
    return out;
}

} // namespace locallex
