#include "locallex/semantics.hpp"

#include <algorithm>

namespace locallex {

bool PrefixTest::operator()(const TerminalString& w)
{
    if (auto it = memo_.find(w); it != memo_.end())
        return it->second;
    PrefixRecognizer rec(*g_);
    bool ok = true;
    for (SymbolId t : w)
        if (!rec.push(t)) {
            ok = false;
            break;
        }
    memo_.emplace(w, ok);
    return ok;
}

bool PrefixTest::viable(const Path& p, const Token& x)
{
    TerminalString w = terminals_of(p);
    w.push_back(x.terminal);
    return (*this)(w);
}

TokenSet admissible(const Lexer& lexer, std::string_view input, std::size_t k, const PathSet& paths,
                    PrefixTest& prefix)
{
    std::vector<const Path*> at_k;
    for (const Path& p : paths)
        if (char_length(p) == k)
            at_k.push_back(&p);
    TokenSet out;
    if (at_k.empty())
        return out;
    for (const Token& x : lexer.tokens_at(input, k))
        for (const Path* p : at_k)
            if (prefix.viable(*p, x)) {
                out.insert(x);
                break;
            }
    return out;
}

std::size_t trailing_empty_run(const Path& p)
{
    std::size_t run = 0;
    for (auto it = p.rbegin(); it != p.rend() && it->empty(); ++it)
        ++run;
    return run;
}

PathSet append_tokens(std::size_t k, const TokenSet& tokens, const PathSet& paths, PrefixTest& prefix,
                      EpsilonCap* cap)
{
    PathSet out = paths;
    for (const Path& p : paths) {
        if (char_length(p) != k)
            continue;
        for (const Token& x : tokens) {
            if (!prefix.viable(p, x))
                continue;
            if (x.empty() && cap && trailing_empty_run(p) >= cap->max_run) {
                cap->hit = true;
                continue;
            }
            Path q = p;
            q.push_back(x);
            out.insert(std::move(q));
        }
    }
    return out;
}

SemanticsResult run_semantics(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input,
                              const OracleConfig& cfg)
{
    const std::size_t n = input.size();
    SemanticsResult result;
    result.selected.resize(n + 1);
    if (cfg.record_trace)
        result.trace.positions.resize(n + 1);

    PrefixTest prefix(g);
    PathSet paths{Path{}}; // P_0^0

    for (std::size_t k = 0; k <= n; ++k) {
        TokenSet selected; // Z_k^0
        auto* trace = cfg.record_trace ? &result.trace.positions[k] : nullptr;
        if (trace) {
            trace->selected.push_back(selected);
            trace->paths.push_back(paths);
        }
        for (;;) {
            // W from the current P, then Z, then the Append limit.
            TokenSet adm = admissible(lexer, input, k, paths, prefix);
            TokenSet next_selected = sel.select(selected, adm);

            EpsilonCap cap{cfg.max_epsilon_iterations};
            bool over_budget = false;
            auto lim = limit(
                [&](const PathSet& s) {
                    if (s.size() > cfg.max_paths) {
                        over_budget = true;
                        return s;
                    }
                    return append_tokens(k, next_selected, s, prefix, &cap);
                },
                paths);
            result.truncated = result.truncated || cap.hit || lim.truncated;

            if (trace) {
                trace->admissible.push_back(adm);
                trace->selected.push_back(next_selected);
                trace->paths.push_back(lim.value);
            }

            const bool stable = next_selected == selected;
            selected = std::move(next_selected);
            paths = std::move(lim.value);
            if (over_budget || paths.size() > cfg.max_paths) {
                result.truncated = true;
                result.selected[k] = std::move(selected);
                result.paths = std::move(paths);
                return result;
            }
            if (stable)
                break;
        }
        result.selected[k] = std::move(selected);
    }
    result.paths = std::move(paths);
    return result;
}

PathSet ll_of(const SemanticsResult& result, const Grammar& g, std::string_view input)
{
    PathSet out;
    for (const Path& p : result.paths)
        if (char_length(p) == input.size() && in_language(g, terminals_of(p)))
            out.insert(p);
    return out;
}

bool p_valid(const Grammar& g, const BoundedLanguages& langs, const Item& item, const Path& p)
{
    if (char_length(p) != item.bin)
        return false;
    const Rule& r = g.rule(item.rule);
    std::span<const SymbolId> alpha(r.rhs.data(), item.dot);
    const TerminalString w = terminals_of(p);
    std::size_t consumed = 0;
    for (std::size_t u = 0; u <= p.size(); ++u) {
        if (u > 0)
            consumed += p[u - 1].size();
        if (consumed > item.origin)
            break;
        if (consumed != item.origin)
            continue;
        TerminalString before(w.begin(), w.begin() + u);
        TerminalString after(w.begin() + u, w.end());
        if (langs.left_contexts().contains({before, r.lhs}) && langs.derives(alpha, after))
            return true;
    }
    return false;
}

ItemSet generated_items(const Grammar& g, const PathSet& paths, std::size_t input_length)
{
    std::size_t bound = 0;
    for (const Path& p : paths)
        bound = std::max(bound, p.size());
    BoundedLanguages langs(g, bound);

    std::vector<std::vector<const Path*>> by_length(input_length + 1);
    for (const Path& p : paths)
        if (char_length(p) <= input_length)
            by_length[char_length(p)].push_back(&p);

    ItemSet out;
    for (std::size_t j = 0; j <= input_length; ++j)
        for (std::size_t i = 0; i <= j; ++i)
            for (std::size_t ri = 0; ri < g.rules().size(); ++ri)
                for (std::size_t d = 0; d <= g.rule(ri).rhs.size(); ++d) {
                    Item item = make_item(ri, d, i, j);
                    for (const Path* p : by_length[j])
                        if (p_valid(g, langs, item, *p)) {
                            out.insert(item);
                            break;
                        }
                }
    return out;
}

} // namespace locallex
