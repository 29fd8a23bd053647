#ifndef LOCALLEX_EARLEY_HPP
#define LOCALLEX_EARLEY_HPP

#include "locallex/grammar.hpp"
#include "locallex/lexer.hpp"
#include "locallex/selector.hpp"
#include "locallex/token.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace locallex {

/// (N -> alpha • beta, origin, bin) where rule is the index of N -> alpha beta
/// and dot = |alpha|. Ordered by (bin, rule, dot, origin).
struct Item {
    std::uint32_t bin = 0;
    std::uint32_t rule = 0;
    std::uint32_t dot = 0;
    std::uint32_t origin = 0;

    friend bool operator==(const Item&, const Item&) = default;
    friend auto operator<=>(const Item&, const Item&) = default;
};

inline Item make_item(std::size_t rule, std::size_t dot, std::size_t origin, std::size_t bin)
{
    return Item{static_cast<std::uint32_t>(bin), static_cast<std::uint32_t>(rule),
                static_cast<std::uint32_t>(dot), static_cast<std::uint32_t>(origin)};
}

using ItemSet = std::set<Item>;

std::string format_item(const Grammar& g, const Item& item);

// Set-level chart operators, evaluated directly from their comprehensions.
// They are slow and serve as the reference route for compute_chart().

ItemSet init_items(const Grammar& g);
ItemSet predict(const Grammar& g, std::size_t k, const ItemSet& items);
ItemSet complete(const Grammar& g, std::size_t k, const ItemSet& items);
/// Sel(T, { x : (N -> alpha • X beta, i, k) in items, X terminal, x in Lex(X)(input, k) }).
TokenSet tokens_op(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input,
                   const TokenSet& selected, std::size_t k, const ItemSet& items);
ItemSet scan(const Grammar& g, const TokenSet& tokens, std::size_t k, const ItemSet& items);
/// limit (Scan T k ∘ Complete k ∘ Predict k) items
ItemSet pi(const Grammar& g, std::size_t k, const TokenSet& tokens, const ItemSet& items);

/// J_k^u and T_k^u for every position, as produced by the reference route.
struct ChartTrace {
    struct Position {
        std::vector<ItemSet> items;   // J_k^0, J_k^1, ...
        std::vector<TokenSet> tokens; // T_k^0, T_k^1, ...
    };
    std::vector<Position> positions;
};

struct ReferenceChart {
    ItemSet items;
    std::vector<TokenSet> tokens;
};

ReferenceChart compute_chart_reference(const Grammar& g, const Lexer& lexer, const Selector& sel,
                                       std::string_view input, ChartTrace* trace = nullptr);

/// Completed item chart of the local-lexing Earley recognizer.
class Chart {
public:
    const std::string& input() const noexcept { return input_; }
    std::size_t bin_count() const noexcept { return bins_.size(); }
    /// Items of bin j in canonical order.
    std::span<const Item> bin(std::size_t j) const { return bins_.at(j); }
    /// T_k^∞: the selected tokens at position k.
    const TokenSet& tokens(std::size_t k) const { return tokens_.at(k); }
    /// Number of token-selection rounds at position k.
    std::size_t rounds(std::size_t k) const { return rounds_.at(k); }

    std::size_t size() const noexcept { return size_; }
    bool contains(const Item& item) const;
    ItemSet items() const;

    /// Some (start -> alpha •, 0, |input|) is present.
    bool accepted() const noexcept { return accepted_; }

private:
    friend Chart compute_chart(const Grammar&, const Lexer&, const Selector&, std::string_view);

    std::string input_;
    std::vector<std::vector<Item>> bins_;
    std::vector<std::vector<std::uint8_t>> seen_;
    std::vector<std::uint32_t> dotted_offset_;
    std::uint32_t dotted_count_ = 0;
    std::vector<TokenSet> tokens_;
    std::vector<std::size_t> rounds_;
    std::size_t size_ = 0;
    bool accepted_ = false;
};

/// Worklist evaluation of the J/T/I chain.
Chart compute_chart(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input);

bool recognize(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input);

/// (C(n+1, 2) + n + 1) * sum over rules of (1 + |rhs|).
std::size_t item_bound(const Grammar& g, std::size_t input_length);

/// One line per item `j<TAB>N -> α • β<TAB>i`, then `k<TAB>terminal<TAB>"chars"`
/// per selected token.
std::string dump_chart(const Grammar& g, const Chart& chart);

/// Incremental terminal-level Earley recognizer. push() appends one terminal
/// and reports whether the terminal string is still a viable prefix.
class PrefixRecognizer {
public:
    explicit PrefixRecognizer(const Grammar& g);

    bool push(SymbolId terminal);
    void pop();
    std::size_t depth() const noexcept { return sets_.size() - 1; }
    bool viable() const noexcept { return !sets_.back().empty(); }
    bool accepts() const;

private:
    struct Entry {
        std::uint32_t rule;
        std::uint32_t dot;
        std::uint32_t origin;
    };

    bool add(std::size_t j, std::uint32_t rule, std::uint32_t dot, std::uint32_t origin);
    void close(std::size_t j);

    const Grammar* g_;
    std::vector<std::uint32_t> dotted_offset_;
    std::uint32_t dotted_count_ = 0;
    std::vector<std::vector<Entry>> sets_;
    std::vector<std::vector<std::uint8_t>> seen_;
};

/// w ∈ L_prefix, via compute_chart() with identity lexing and the empty order:
/// true iff bin |w| is nonempty.
bool viable_prefix(const Grammar& g, const TerminalString& w);
/// w ∈ L, via compute_chart() with identity lexing and the empty order.
bool in_language(const Grammar& g, const TerminalString& w);

struct ExtractCaps {
    static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    /// Maximum run of consecutive empty tokens in a path.
    std::size_t max_epsilon_iterations = 8;
    /// Maximum number of search nodes (token sequences visited).
    std::size_t max_paths = 100'000;
    /// Stop after this many complete token sequences.
    std::size_t max_results = unlimited;
};

struct Extraction {
    std::set<Path> paths;
    bool truncated = false;
};

/// ℓℓ(input): depth-first search over the per-position selected token sets
/// with viable-prefix pruning, keeping sequences that cover the input and
/// whose terminals are in L.
Extraction extract_ll(const Chart& chart, const Grammar& g, const ExtractCaps& caps = {});

} // namespace locallex

#endif
