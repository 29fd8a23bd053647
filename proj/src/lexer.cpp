#include "locallex/lexer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace locallex {

namespace {

// Thompson NFA: each state has at most one character edge plus epsilon edges.
struct Nfa {
    struct State {
        CharSet on;
        std::int32_t target = -1;
        std::vector<std::int32_t> eps;
    };
    std::vector<State> states;

    std::int32_t add()
    {
        states.emplace_back();
        return static_cast<std::int32_t>(states.size() - 1);
    }
};

struct Fragment {
    std::int32_t in;
    std::int32_t out;
};

Fragment thompson(Nfa& nfa, const Pattern& p)
{
    switch (p.kind) {
    case Pattern::Kind::empty: {
        auto s = nfa.add();
        return {s, s};
    }
    case Pattern::Kind::chars: {
        auto a = nfa.add();
        auto b = nfa.add();
        nfa.states[a].on = p.chars;
        nfa.states[a].target = b;
        return {a, b};
    }
    case Pattern::Kind::concat: {
        Fragment f = thompson(nfa, p.parts.front());
        for (std::size_t i = 1; i < p.parts.size(); ++i) {
            Fragment g = thompson(nfa, p.parts[i]);
            nfa.states[f.out].eps.push_back(g.in);
            f.out = g.out;
        }
        return f;
    }
    case Pattern::Kind::alt: {
        auto in = nfa.add();
        auto out = nfa.add();
        for (const auto& part : p.parts) {
            Fragment g = thompson(nfa, part);
            nfa.states[in].eps.push_back(g.in);
            nfa.states[g.out].eps.push_back(out);
        }
        return {in, out};
    }
    case Pattern::Kind::star:
    case Pattern::Kind::plus:
    case Pattern::Kind::optional: {
        auto in = nfa.add();
        auto out = nfa.add();
        Fragment g = thompson(nfa, p.parts.front());
        nfa.states[in].eps.push_back(g.in);
        nfa.states[g.out].eps.push_back(out);
        if (p.kind != Pattern::Kind::plus)
            nfa.states[in].eps.push_back(out);
        if (p.kind != Pattern::Kind::optional)
            nfa.states[g.out].eps.push_back(g.in);
        return {in, out};
    }
    }
    throw PatternError("unknown pattern node");
}

std::set<std::int32_t> eps_closure(const Nfa& nfa, std::set<std::int32_t> states)
{
    std::vector<std::int32_t> work(states.begin(), states.end());
    while (!work.empty()) {
        auto s = work.back();
        work.pop_back();
        for (auto t : nfa.states[s].eps)
            if (states.insert(t).second)
                work.push_back(t);
    }
    return states;
}

} // namespace

Dfa build_dfa(const Pattern& p, const CharSet& alphabet)
{
    Nfa nfa;
    Fragment f = thompson(nfa, p);

    Dfa dfa;
    std::map<std::set<std::int32_t>, std::int32_t> index;
    std::vector<std::set<std::int32_t>> subsets;

    auto intern = [&](std::set<std::int32_t> s) -> std::int32_t {
        auto [it, fresh] = index.emplace(s, static_cast<std::int32_t>(subsets.size()));
        if (fresh) {
            dfa.accepting_.push_back(s.contains(f.out));
            std::array<std::int32_t, 256> row;
            row.fill(Dfa::dead);
            dfa.transitions_.push_back(row);
            subsets.push_back(std::move(s));
        }
        return it->second;
    };

    intern(eps_closure(nfa, {f.in}));
    for (std::size_t d = 0; d < subsets.size(); ++d) {
        for (unsigned c = 0; c < 256; ++c) {
            if (!alphabet.test(c))
                continue;
            std::set<std::int32_t> moved;
            for (auto s : subsets[d])
                if (nfa.states[s].target >= 0 && nfa.states[s].on.test(c))
                    moved.insert(nfa.states[s].target);
            if (moved.empty())
                continue;
            auto target = intern(eps_closure(nfa, std::move(moved)));
            dfa.transitions_[d][c] = target;
        }
    }
    return dfa;
}

bool Dfa::accepts(std::string_view s) const
{
    std::int32_t state = 0;
    for (char c : s) {
        state = next(state, c);
        if (state == dead)
            return false;
    }
    return accepting(state);
}

void TerminalRecognizer::match_lengths(std::string_view input, std::size_t k,
                                       std::vector<std::size_t>& out) const
{
    out.clear();
    std::int32_t state = 0;
    std::size_t longest = 0;
    bool any = false;
    auto accept = [&](std::size_t len) {
        if (mode_ == MatchMode::all)
            out.push_back(len);
        longest = len;
        any = true;
    };
    if (dfa_.accepting(state))
        accept(0);
    for (std::size_t i = k; i < input.size(); ++i) {
        state = dfa_.next(state, input[i]);
        if (state == Dfa::dead)
            break;
        if (dfa_.accepting(state))
            accept(i + 1 - k);
    }
    if (mode_ == MatchMode::longest && any)
        out.push_back(longest);
}

TerminalRecognizer compile_pattern(const Pattern& p, const CharSet& alphabet, MatchMode mode)
{
    CharSet foreign = p.used_chars() & ~alphabet;
    if (foreign.any())
        throw PatternError("pattern uses characters outside the alphabet: " + describe_chars(foreign));
    return TerminalRecognizer(build_dfa(p, alphabet), mode);
}

Lexer::Lexer(CharSet alphabet, std::vector<TerminalRecognizer> recognizers)
    : alphabet_(alphabet), recognizers_(std::move(recognizers))
{
}

Lexer Lexer::identity(const Grammar& g)
{
    if (g.terminal_count() > 256)
        throw LexError("identity lexing supports at most 256 terminals");
    CharSet alphabet;
    for (std::size_t t = 0; t < g.terminal_count(); ++t)
        alphabet.set(t);
    std::vector<TerminalRecognizer> recs;
    for (std::size_t t = 0; t < g.terminal_count(); ++t)
        recs.push_back(compile_pattern(Pattern::literal(static_cast<char>(t)), alphabet));
    return Lexer(alphabet, std::move(recs));
}

std::string Lexer::encode_identity(const TerminalString& w)
{
    std::string s;
    for (SymbolId t : w) {
        if (t > 255)
            throw LexError("identity lexing supports at most 256 terminals");
        s += static_cast<char>(t);
    }
    return s;
}

const TerminalRecognizer& Lexer::recognizer(SymbolId t) const
{
    if (t >= recognizers_.size())
        throw LexError("no recognizer for terminal " + std::to_string(t));
    return recognizers_[t];
}

void Lexer::lex_into(SymbolId t, std::string_view input, std::size_t k, TokenSet& out) const
{
    if (k > input.size())
        throw LexError("position " + std::to_string(k) + " is beyond the input of length " +
                       std::to_string(input.size()));
    thread_local std::vector<std::size_t> lengths;
    recognizer(t).match_lengths(input, k, lengths);
    for (auto len : lengths)
        out.insert(Token{t, std::string(input.substr(k, len))});
}

TokenSet Lexer::lex(SymbolId t, std::string_view input, std::size_t k) const
{
    TokenSet out;
    lex_into(t, input, k, out);
    return out;
}

TokenSet Lexer::tokens_at(std::string_view input, std::size_t k) const
{
    TokenSet out;
    for (std::size_t t = 0; t < recognizers_.size(); ++t)
        lex_into(static_cast<SymbolId>(t), input, k, out);
    return out;
}

std::optional<std::size_t> Lexer::first_foreign_char(std::string_view input) const
{
    for (std::size_t i = 0; i < input.size(); ++i)
        if (!contains(alphabet_, input[i]))
            return i;
    return std::nullopt;
}

} // namespace locallex
