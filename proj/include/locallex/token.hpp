#ifndef LOCALLEX_TOKEN_HPP
#define LOCALLEX_TOKEN_HPP

#include "locallex/grammar.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace locallex {

/// A terminal together with the characters it covers. Empty iff chars is empty.
struct Token {
    SymbolId terminal = 0;
    std::string chars;

    bool empty() const noexcept { return chars.empty(); }
    std::size_t size() const noexcept { return chars.size(); }

    friend bool operator==(const Token&, const Token&) = default;
    friend auto operator<=>(const Token&, const Token&) = default;
};

using TokenSet = std::set<Token>;

/// Token sequence. Paths are compared structurally.
using Path = std::vector<Token>;

inline std::size_t char_length(const Path& p) noexcept
{
    std::size_t n = 0;
    for (const auto& t : p)
        n += t.size();
    return n;
}

inline TerminalString terminals_of(const Path& p)
{
    TerminalString w;
    w.reserve(p.size());
    for (const auto& t : p)
        w.push_back(t.terminal);
    return w;
}

inline std::string chars_of(const Path& p)
{
    std::string s;
    for (const auto& t : p)
        s += t.chars;
    return s;
}

inline bool is_subset(const TokenSet& a, const TokenSet& b)
{
    for (const auto& x : a)
        if (!b.contains(x))
            return false;
    return true;
}

/// `chars/terminal`, with ε for empty tokens.
std::string format_token(const Grammar& g, const Token& t);
/// Space separated tokens; `ε` for the empty path.
std::string format_path(const Grammar& g, const Path& p);

/// Output order for tokens: longer first, then by terminal name.
bool canonical_token_less(const Grammar& g, const Token& a, const Token& b);
/// Lexicographic extension of canonical_token_less.
bool canonical_path_less(const Grammar& g, const Path& a, const Path& b);

std::vector<Token> canonical_tokens(const Grammar& g, const TokenSet& tokens);
std::vector<Path> canonical_paths(const Grammar& g, const std::set<Path>& paths);

} // namespace locallex

#endif
