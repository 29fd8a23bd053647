#ifndef LOCALLEX_SELECTOR_HPP
#define LOCALLEX_SELECTOR_HPP

#include "locallex/grammar.hpp"
#include "locallex/token.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace locallex {

class SelectorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SelectorMode : std::uint8_t { none, order, longest, longest_then_order };

std::string_view to_string(SelectorMode mode);
std::optional<SelectorMode> parse_selector_mode(std::string_view text);

/// `lower` has lower priority than `upper`; an empty `upper` stands for every
/// other terminal.
struct OrderEdge {
    SymbolId lower;
    std::optional<SymbolId> upper;
};

/// Sel, induced by a strict partial order on tokens.
///
///   none               -> empty order, Sel(A, B) = B
///   order              -> [x] below [y] in the terminal order
///   longest            -> |x| < |y|
///   longest-then-order -> |x| < |y|, or equal lengths and [x] below [y]
///
/// The terminal order is the transitive closure of the edges. Wildcard edges
/// are expanded after all explicit ones, in the given order; `t < *` relates t
/// to every other terminal not already below t.
class Selector {
public:
    Selector() = default;
    /// Throws SelectorError if the closure is not irreflexive.
    Selector(const Grammar& g, SelectorMode mode, std::span<const OrderEdge> edges = {});

    SelectorMode mode() const noexcept { return mode_; }
    bool below(SymbolId a, SymbolId b) const noexcept
    {
        return a < n_ && b < n_ && below_[a * n_ + b];
    }

    /// x <_Sel y.
    bool less(const Token& x, const Token& y) const noexcept;

    /// A ∪ { x ∈ B : no y ∈ B with x <_Sel y }. Throws SelectorError unless A ⊆ B.
    TokenSet select(const TokenSet& a, const TokenSet& b) const;

private:
    SelectorMode mode_ = SelectorMode::none;
    std::size_t n_ = 0;
    std::vector<bool> below_;
};

/// Longest match first, then priority by list position (later entries win).
/// `priority` must list every terminal of g exactly once.
Selector traditional_selector(const Grammar& g, std::span<const SymbolId> priority);

} // namespace locallex

#endif
