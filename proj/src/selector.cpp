#include "locallex/selector.hpp"

#include <set>

namespace locallex {

std::string_view to_string(SelectorMode mode)
{
    switch (mode) {
    case SelectorMode::none: return "none";
    case SelectorMode::order: return "order";
    case SelectorMode::longest: return "longest";
    case SelectorMode::longest_then_order: return "longest-then-order";
    }
    return "?";
}

std::optional<SelectorMode> parse_selector_mode(std::string_view text)
{
    for (auto m : {SelectorMode::none, SelectorMode::order, SelectorMode::longest,
                   SelectorMode::longest_then_order})
        if (to_string(m) == text)
            return m;
    return std::nullopt;
}

Selector::Selector(const Grammar& g, SelectorMode mode, std::span<const OrderEdge> edges)
    : mode_(mode), n_(g.terminal_count()), below_(n_ * n_, false)
{
    auto check = [&](SymbolId t) {
        if (!g.is_terminal(t))
            throw SelectorError("priority edge names '" + g.name(t) + "', which is not a terminal");
    };
    auto close = [&] {
        for (std::size_t m = 0; m < n_; ++m)
            for (std::size_t a = 0; a < n_; ++a)
                if (below_[a * n_ + m])
                    for (std::size_t b = 0; b < n_; ++b)
                        if (below_[m * n_ + b])
                            below_[a * n_ + b] = true;
    };

    for (const auto& e : edges) {
        check(e.lower);
        if (e.upper) {
            check(*e.upper);
            below_[e.lower * n_ + *e.upper] = true;
        }
    }
    close();
    for (const auto& e : edges) {
        if (e.upper)
            continue;
        for (std::size_t u = 0; u < n_; ++u)
            if (u != e.lower && !below_[u * n_ + e.lower])
                below_[e.lower * n_ + u] = true;
        close();
    }
    for (std::size_t t = 0; t < n_; ++t)
        if (below_[t * n_ + t])
            throw SelectorError("priority order is cyclic: '" + g.name(static_cast<SymbolId>(t)) +
                                "' is below itself");
}

bool Selector::less(const Token& x, const Token& y) const noexcept
{
    switch (mode_) {
    case SelectorMode::none:
        return false;
    case SelectorMode::order:
        return below(x.terminal, y.terminal);
    case SelectorMode::longest:
        return x.size() < y.size();
    case SelectorMode::longest_then_order:
        return x.size() < y.size() || (x.size() == y.size() && below(x.terminal, y.terminal));
    }
    return false;
}

TokenSet Selector::select(const TokenSet& a, const TokenSet& b) const
{
    if (!is_subset(a, b))
        throw SelectorError("selector precondition violated: first argument is not a subset of the second");
    TokenSet out = a;
    for (const auto& x : b) {
        bool maximal = true;
        for (const auto& y : b)
            if (less(x, y)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.insert(x);
    }
    return out;
}

Selector traditional_selector(const Grammar& g, std::span<const SymbolId> priority)
{
    std::set<SymbolId> seen;
    for (SymbolId t : priority) {
        if (!g.is_terminal(t))
            throw SelectorError("'" + g.name(t) + "' is not a terminal");
        if (!seen.insert(t).second)
            throw SelectorError("terminal '" + g.name(t) + "' listed twice");
    }
    if (seen.size() != g.terminal_count())
        throw SelectorError("priority list must cover every terminal");
    std::vector<OrderEdge> edges;
    for (std::size_t i = 0; i < priority.size(); ++i)
        for (std::size_t j = i + 1; j < priority.size(); ++j)
            edges.push_back({priority[i], priority[j]});
    return Selector(g, SelectorMode::longest_then_order, edges);
}

} // namespace locallex
