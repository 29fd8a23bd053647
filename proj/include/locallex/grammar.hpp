#ifndef LOCALLEX_GRAMMAR_HPP
#define LOCALLEX_GRAMMAR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locallex {

using SymbolId = std::uint32_t;

enum class SymbolKind : std::uint8_t { nonterminal, terminal };

struct Symbol {
    SymbolKind kind;
    std::string name;
};

struct Rule {
    SymbolId lhs;
    std::vector<SymbolId> rhs;
};

/// Sequence of terminal symbols.
using TerminalString = std::vector<SymbolId>;

/// Name-level grammar description. Not necessarily well formed; see validate().
struct GrammarDecl {
    struct RuleDecl {
        std::string lhs;
        std::vector<std::string> rhs;
    };

    std::vector<std::string> nonterminals;
    std::vector<std::string> terminals;
    std::vector<RuleDecl> rules;
    std::string start;
};

/// Returns one message per violated well-formedness condition; empty iff the
/// declaration describes a valid grammar.
std::vector<std::string> validate(const GrammarDecl& decl);

class GrammarError : public std::runtime_error {
public:
    GrammarError(const std::string& what, std::vector<std::string> violations = {})
        : std::runtime_error(what), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Immutable context-free grammar with interned symbols.
///
/// Terminals are numbered first (0..T-1) in declaration order, nonterminals
/// follow (T..T+N-1). Rules keep declaration order.
class Grammar {
public:
    /// Throws GrammarError carrying the validate() report if `decl` is invalid.
    static Grammar build(const GrammarDecl& decl);

    std::size_t symbol_count() const noexcept { return symbols_.size(); }
    std::size_t terminal_count() const noexcept { return terminal_count_; }
    std::size_t nonterminal_count() const noexcept { return symbols_.size() - terminal_count_; }

    const Symbol& symbol(SymbolId id) const { return symbols_.at(id); }
    const std::string& name(SymbolId id) const { return symbols_.at(id).name; }
    bool is_terminal(SymbolId id) const noexcept { return id < terminal_count_; }
    bool is_nonterminal(SymbolId id) const noexcept
    {
        return id >= terminal_count_ && id < symbols_.size();
    }

    std::optional<SymbolId> find(std::string_view name) const;
    /// Like find() but throws GrammarError for unknown names.
    SymbolId id(std::string_view name) const;
    std::optional<SymbolId> find_terminal(std::string_view name) const;

    std::vector<SymbolId> terminals() const;
    std::vector<SymbolId> nonterminals() const;

    std::span<const Rule> rules() const noexcept { return rules_; }
    const Rule& rule(std::size_t index) const { return rules_.at(index); }
    /// Indices of the rules whose left-hand side is `nonterminal`.
    std::span<const std::size_t> rules_for(SymbolId nonterminal) const;

    SymbolId start() const noexcept { return start_; }

    /// Nonterminals that derive the empty string.
    const std::vector<bool>& nullable() const noexcept { return nullable_; }

    /// `N -> a b` for dot = npos; `N -> a • b` otherwise.
    std::string rule_string(std::size_t rule_index,
                            std::size_t dot = static_cast<std::size_t>(-1)) const;
    std::string to_string(const TerminalString& w) const;
    TerminalString terminal_string(std::span<const std::string> names) const;

private:
    Grammar() = default;

    std::vector<Symbol> symbols_;
    std::size_t terminal_count_ = 0;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> rules_by_lhs_;
    std::vector<bool> nullable_;
    SymbolId start_ = 0;
};

} // namespace locallex

#endif
