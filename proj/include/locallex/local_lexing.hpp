#ifndef LOCALLEX_LOCAL_LEXING_HPP
#define LOCALLEX_LOCAL_LEXING_HPP

// A complete local-lexing configuration: grammar, per-terminal lexer and
// token selector, built from a name-level description.

#include "locallex/grammar.hpp"
#include "locallex/lexer.hpp"
#include "locallex/selector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace locallex {

struct LocalLexing {
    Grammar grammar;
    Lexer lexer;
    Selector selector;
};

struct LocalLexingDecl {
    struct TerminalDecl {
        std::string name;
        std::string pattern; // pattern source, without delimiters
        MatchMode mode = MatchMode::longest;
    };
    struct PriorityDecl {
        std::string lower;
        std::optional<std::string> upper; // empty: every other terminal
    };

    std::string alphabet; // character class source, e.g. "[a-c+-]"
    std::vector<TerminalDecl> terminals;
    std::vector<GrammarDecl::RuleDecl> rules;
    std::string start; // empty: left-hand side of the first rule
    SelectorMode selector = SelectorMode::none;
    std::vector<PriorityDecl> priorities;
};

/// Nonterminals are the rule left-hand sides, in order of first appearance.
/// Throws GrammarError, PatternError or SelectorError.
LocalLexing build_local_lexing(const LocalLexingDecl& decl);

} // namespace locallex

#endif
