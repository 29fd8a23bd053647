#ifndef LOCALLEX_SPEC_FILE_HPP
#define LOCALLEX_SPEC_FILE_HPP

// Line-oriented configuration format, one declaration per line:
//
//   alphabet [a-z+*()]
//   terminal id /[a-z]+/ longest      (mode: longest (default) or all)
//   selector longest-then-order       (none | order | longest | longest-then-order)
//   priority symbol < id              (or `priority err < *`)
//   rule S -> S plus A | A            (`ε` or an empty alternative for the empty rhs)
//   start S                           (default: left-hand side of the first rule)
//   # comment
//
// Nonterminals are the symbols that appear on a left-hand side.

#include "locallex/local_lexing.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace locallex {

class SpecError : public std::runtime_error {
public:
    /// line 0: the error concerns the file as a whole.
    SpecError(std::size_t line, const std::string& message)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Syntax only; names are not resolved.
LocalLexingDecl parse_spec_decl(std::string_view text);

/// Throws SpecError (with the offending line where one exists) for syntax
/// errors, undeclared symbols, bad patterns and cyclic priority orders.
LocalLexing parse_spec(std::string_view text);

/// Reads and parses a file; unreadable files raise SpecError.
LocalLexing load_spec(const std::filesystem::path& path);

} // namespace locallex

#endif
