#ifndef LOCALLEX_LEXER_HPP
#define LOCALLEX_LEXER_HPP

#include "locallex/grammar.hpp"
#include "locallex/pattern.hpp"
#include "locallex/token.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace locallex {

class LexError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic automaton over bytes. State 0 is the start state; -1 is dead.
class Dfa {
public:
    static constexpr std::int32_t dead = -1;

    std::size_t state_count() const noexcept { return accepting_.size(); }
    bool accepting(std::int32_t state) const { return accepting_.at(state); }
    std::int32_t next(std::int32_t state, char c) const
    {
        return transitions_[state][static_cast<unsigned char>(c)];
    }
    bool accepts(std::string_view s) const;

private:
    friend Dfa build_dfa(const Pattern&, const CharSet&);

    std::vector<std::array<std::int32_t, 256>> transitions_;
    std::vector<bool> accepting_;
};

/// Thompson construction followed by subset construction restricted to `alphabet`.
Dfa build_dfa(const Pattern& p, const CharSet& alphabet);

enum class MatchMode : std::uint8_t { longest, all };

class TerminalRecognizer {
public:
    TerminalRecognizer(Dfa dfa, MatchMode mode) : dfa_(std::move(dfa)), mode_(mode) {}

    const Dfa& dfa() const noexcept { return dfa_; }
    MatchMode mode() const noexcept { return mode_; }

    /// Lengths of the matching prefixes of input[k..]: the longest one only, or
    /// all of them in ascending order, depending on the mode.
    void match_lengths(std::string_view input, std::size_t k, std::vector<std::size_t>& out) const;

private:
    Dfa dfa_;
    MatchMode mode_;
};

/// Throws PatternError if the pattern mentions characters outside `alphabet`.
TerminalRecognizer compile_pattern(const Pattern& p, const CharSet& alphabet,
                                   MatchMode mode = MatchMode::longest);

/// Lex: one recognizer per terminal of a grammar, over a fixed alphabet.
class Lexer {
public:
    /// `recognizers[t]` serves terminal t; every terminal must be covered.
    Lexer(CharSet alphabet, std::vector<TerminalRecognizer> recognizers);

    /// Character identity lexing: terminal t matches exactly the byte t.
    /// Used to run terminal strings through the character-level machinery.
    static Lexer identity(const Grammar& g);
    static std::string encode_identity(const TerminalString& w);

    const CharSet& alphabet() const noexcept { return alphabet_; }
    std::size_t terminal_count() const noexcept { return recognizers_.size(); }
    const TerminalRecognizer& recognizer(SymbolId t) const;

    /// Lex(t)(input, k).
    TokenSet lex(SymbolId t, std::string_view input, std::size_t k) const;
    void lex_into(SymbolId t, std::string_view input, std::size_t k, TokenSet& out) const;

    /// X_k: union of lex() over all terminals.
    TokenSet tokens_at(std::string_view input, std::size_t k) const;

    /// Offset of the first character outside the alphabet, if any.
    std::optional<std::size_t> first_foreign_char(std::string_view input) const;

private:
    CharSet alphabet_;
    std::vector<TerminalRecognizer> recognizers_;
};

} // namespace locallex

#endif
