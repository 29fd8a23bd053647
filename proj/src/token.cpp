#include "locallex/token.hpp"

#include <algorithm>

namespace locallex {

std::string format_token(const Grammar& g, const Token& t)
{
    return (t.empty() ? std::string("ε") : t.chars) + "/" + g.name(t.terminal);
}

std::string format_path(const Grammar& g, const Path& p)
{
    if (p.empty())
        return "ε";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ' ';
        s += format_token(g, p[i]);
    }
    return s;
}

bool canonical_token_less(const Grammar& g, const Token& a, const Token& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    if (a.terminal != b.terminal)
        return g.name(a.terminal) < g.name(b.terminal);
    return a.chars < b.chars;
}

bool canonical_path_less(const Grammar& g, const Path& a, const Path& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [&](const Token& x, const Token& y) {
                                            return canonical_token_less(g, x, y);
                                        });
}

std::vector<Token> canonical_tokens(const Grammar& g, const TokenSet& tokens)
{
    std::vector<Token> out(tokens.begin(), tokens.end());
    std::ranges::sort(out, [&](const Token& a, const Token& b) { return canonical_token_less(g, a, b); });
    return out;
}

std::vector<Path> canonical_paths(const Grammar& g, const std::set<Path>& paths)
{
    std::vector<Path> out(paths.begin(), paths.end());
    std::ranges::sort(out, [&](const Path& a, const Path& b) { return canonical_path_less(g, a, b); });
    return out;
}

} // namespace locallex
