#ifndef LOCALLEX_EXAMPLES_HPP
#define LOCALLEX_EXAMPLES_HPP

// Ready-made configurations for the worked examples: traditional lexing,
// ε-token pumping, the expression grammar H under four selectors, the C cast
// ambiguity and error recovery with empty error tokens.

#include "locallex/local_lexing.hpp"

#include <string>
#include <utility>
#include <vector>

namespace locallex::examples {

/// (pattern, terminal) pairs, lowest priority first. Grammar S -> S T | ε,
/// T -> t for every terminal; longest match, then later pairs win.
/// Throws std::invalid_argument if a pattern matches the empty string.
LocalLexingDecl traditional_decl(const std::string& alphabet,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);
LocalLexing traditional(const std::string& alphabet,
                        const std::vector<std::pair<std::string, std::string>>& pairs);

/// Σ = {a}; the single terminal t1 matches a*.
LocalLexingDecl infinite_decl();
LocalLexing infinite_example();

/// Grammar H over Σ = {+, -, a, b, c}. Variant selects the selector:
///   3 -> none
///   4 -> order, symbol below id and minus
///   5 -> longest
///   6 -> longest-then-order, symbol below id
/// Throws std::invalid_argument for any other variant.
LocalLexingDecl grammar_H_decl(int variant);
LocalLexing grammar_H(int variant);

/// Expression/cast grammar where an identifier may be a type or a variable.
LocalLexingDecl lexer_hack_decl();
LocalLexing lexer_hack();

/// Arithmetic grammar with juxtaposition and three error terminals ranked
/// below every other terminal.
LocalLexingDecl error_recovery_decl();
LocalLexing error_recovery();

} // namespace locallex::examples

#endif
