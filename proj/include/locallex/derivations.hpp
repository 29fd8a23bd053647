#ifndef LOCALLEX_DERIVATIONS_HPP
#define LOCALLEX_DERIVATIONS_HPP

// Brute-force language oracles over a grammar, bounded by terminal length.
// They are exponential and exist for desk-scale testing only.

#include "locallex/grammar.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace locallex {

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_node_budget = 1'000'000;

/// { w : start =>* w, |w| <= max_length }
std::set<TerminalString> enumerate_language(const Grammar& g, std::size_t max_length,
                                            std::size_t node_budget = default_node_budget);

/// { w : start =>* w alpha for some alpha, |w| <= max_length }
std::set<TerminalString> enumerate_prefix_language(const Grammar& g, std::size_t max_length,
                                                   std::size_t node_budget = default_node_budget);

/// Nonterminals deriving no terminal string (least-fixpoint productivity marking).
std::set<SymbolId> unproductive_nonterminals(const Grammar& g);

/// A derivation tree: `rule` is npos for terminal leaves.
struct Derivation {
    static constexpr std::size_t leaf = static_cast<std::size_t>(-1);

    SymbolId symbol = 0;
    std::size_t rule = leaf;
    std::vector<Derivation> children;
};

/// Replays `d` as a leftmost derivation, checking every step against the
/// grammar's rules. Returns the final sentential form, which is all terminal.
/// Throws std::logic_error if a step does not correspond to a rule.
TerminalString replay(const Grammar& g, const Derivation& d);

/// Per-symbol truncated languages, prefix languages and left contexts,
/// computed by a least fixpoint over the rules. Every language entry records
/// a witness so a derivation can be reconstructed.
class BoundedLanguages {
public:
    BoundedLanguages(const Grammar& g, std::size_t max_length,
                     std::size_t node_budget = default_node_budget);

    std::size_t max_length() const noexcept { return max_length_; }

    /// { w : symbol =>* w, |w| <= max_length }
    std::set<TerminalString> language(SymbolId symbol) const;
    /// { w : symbol =>* w alpha, |w| <= max_length }
    const std::set<TerminalString>& prefixes(SymbolId symbol) const;

    bool derives(SymbolId symbol, const TerminalString& w) const;
    /// alpha =>* w for a symbol sequence alpha.
    bool derives(std::span<const SymbolId> alpha, const TerminalString& w) const;

    /// Throws std::out_of_range if symbol does not derive w.
    Derivation derivation(SymbolId symbol, const TerminalString& w) const;

    /// { (w, N) : start =>* w N gamma for some gamma, |w| <= max_length }
    const std::set<std::pair<TerminalString, SymbolId>>& left_contexts() const noexcept
    {
        return left_contexts_;
    }

private:
    struct Witness {
        std::size_t rule;
        std::vector<TerminalString> parts;
    };

    const Grammar* grammar_;
    std::size_t max_length_;
    std::vector<std::map<TerminalString, Witness>> language_;
    std::vector<std::set<TerminalString>> prefixes_;
    std::set<std::pair<TerminalString, SymbolId>> left_contexts_;
};

} // namespace locallex

#endif
