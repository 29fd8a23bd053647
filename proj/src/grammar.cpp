#include "locallex/grammar.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace locallex {

namespace {

std::string describe_rule(const GrammarDecl::RuleDecl& r)
{
    std::string s = r.lhs + " ->";
    if (r.rhs.empty())
        s += " ε";
    for (const auto& sym : r.rhs)
        s += " " + sym;
    return s;
}

} // namespace

std::vector<std::string> validate(const GrammarDecl& decl)
{
    std::vector<std::string> report;
    std::set<std::string> nts, ts;

    for (const auto& n : decl.nonterminals) {
        if (n.empty())
            report.push_back("empty nonterminal name");
        else if (!nts.insert(n).second)
            report.push_back("nonterminal '" + n + "' declared twice");
    }
    for (const auto& t : decl.terminals) {
        if (t.empty())
            report.push_back("empty terminal name");
        else if (!ts.insert(t).second)
            report.push_back("terminal '" + t + "' declared twice");
    }
    for (const auto& n : nts)
        if (ts.contains(n))
            report.push_back("'" + n + "' is declared both as nonterminal and as terminal");

    if (decl.start.empty())
        report.push_back("no start symbol");
    else if (ts.contains(decl.start) && !nts.contains(decl.start))
        report.push_back("start symbol '" + decl.start + "' is a terminal");
    else if (!nts.contains(decl.start))
        report.push_back("start symbol '" + decl.start + "' is not declared");

    for (const auto& r : decl.rules) {
        if (!nts.contains(r.lhs)) {
            if (ts.contains(r.lhs))
                report.push_back("rule '" + describe_rule(r) + "': left-hand side is a terminal");
            else
                report.push_back("rule '" + describe_rule(r) + "': undeclared symbol '" + r.lhs + "'");
        }
        for (const auto& sym : r.rhs)
            if (!nts.contains(sym) && !ts.contains(sym))
                report.push_back("rule '" + describe_rule(r) + "': undeclared symbol '" + sym + "'");
    }
    return report;
}

Grammar Grammar::build(const GrammarDecl& decl)
{
    auto report = validate(decl);
    if (!report.empty()) {
        std::string what = "invalid grammar: " + report.front();
        throw GrammarError(what, std::move(report));
    }

    Grammar g;
    std::unordered_map<std::string, SymbolId> ids;
    for (const auto& t : decl.terminals) {
        ids.emplace(t, static_cast<SymbolId>(g.symbols_.size()));
        g.symbols_.push_back({SymbolKind::terminal, t});
    }
    g.terminal_count_ = g.symbols_.size();
    for (const auto& n : decl.nonterminals) {
        ids.emplace(n, static_cast<SymbolId>(g.symbols_.size()));
        g.symbols_.push_back({SymbolKind::nonterminal, n});
    }

    g.rules_by_lhs_.resize(g.symbols_.size());
    for (const auto& r : decl.rules) {
        Rule rule{ids.at(r.lhs), {}};
        rule.rhs.reserve(r.rhs.size());
        for (const auto& sym : r.rhs)
            rule.rhs.push_back(ids.at(sym));
        g.rules_by_lhs_[rule.lhs].push_back(g.rules_.size());
        g.rules_.push_back(std::move(rule));
    }
    g.start_ = ids.at(decl.start);

    g.nullable_.assign(g.symbols_.size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : g.rules_) {
            if (g.nullable_[r.lhs])
                continue;
            if (std::ranges::all_of(r.rhs, [&](SymbolId s) { return g.nullable_[s]; })) {
                g.nullable_[r.lhs] = true;
                changed = true;
            }
        }
    }
    return g;
}

std::optional<SymbolId> Grammar::find(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return static_cast<SymbolId>(i);
    return std::nullopt;
}

SymbolId Grammar::id(std::string_view name) const
{
    if (auto s = find(name))
        return *s;
    throw GrammarError("unknown symbol '" + std::string(name) + "'");
}

std::optional<SymbolId> Grammar::find_terminal(std::string_view name) const
{
    auto s = find(name);
    if (s && is_terminal(*s))
        return s;
    return std::nullopt;
}

std::vector<SymbolId> Grammar::terminals() const
{
    std::vector<SymbolId> out(terminal_count_);
    for (std::size_t i = 0; i < terminal_count_; ++i)
        out[i] = static_cast<SymbolId>(i);
    return out;
}

std::vector<SymbolId> Grammar::nonterminals() const
{
    std::vector<SymbolId> out;
    for (std::size_t i = terminal_count_; i < symbols_.size(); ++i)
        out.push_back(static_cast<SymbolId>(i));
    return out;
}

std::span<const std::size_t> Grammar::rules_for(SymbolId nonterminal) const
{
    return rules_by_lhs_.at(nonterminal);
}

std::string Grammar::rule_string(std::size_t rule_index, std::size_t dot) const
{
    const Rule& r = rules_.at(rule_index);
    std::string s = name(r.lhs) + " ->";
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
        if (i == dot)
            s += " •";
        s += " " + name(r.rhs[i]);
    }
    if (dot == r.rhs.size())
        s += " •";
    return s;
}

std::string Grammar::to_string(const TerminalString& w) const
{
    if (w.empty())
        return "ε";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += name(w[i]);
    }
    return s;
}

TerminalString Grammar::terminal_string(std::span<const std::string> names) const
{
    TerminalString w;
    for (const auto& n : names) {
        auto t = find_terminal(n);
        if (!t)
            throw GrammarError("'" + n + "' is not a terminal");
        w.push_back(*t);
    }
    return w;
}

} // namespace locallex
