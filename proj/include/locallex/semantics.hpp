#ifndef LOCALLEX_SEMANTICS_HPP
#define LOCALLEX_SEMANTICS_HPP

// Direct evaluation of the local lexing semantics: paths are generated
// position by position, W (admissible tokens), Z (selected tokens) and P
// (paths) forming monotone chains at every position. This is the reference
// the Earley recognizer is tested against, not an efficient parser.

#include "locallex/derivations.hpp"
#include "locallex/earley.hpp"
#include "locallex/grammar.hpp"
#include "locallex/lexer.hpp"
#include "locallex/selector.hpp"
#include "locallex/token.hpp"

#include <limits>
#include <map>
#include <set>
#include <string_view>
#include <vector>

namespace locallex {

using PathSet = std::set<Path>;

struct OracleConfig {
    /// Maximum run of consecutive empty tokens in a path. Paths that would
    /// exceed it are not generated and the run is flagged truncated.
    std::size_t max_epsilon_iterations = 8;
    /// The run stops, truncated, once more paths than this exist.
    std::size_t max_paths = 100'000;
    /// Keep W, Z and P for every iteration.
    bool record_trace = false;
};

/// Memoized [w] ∈ L_prefix test backed by the terminal-level Earley recognizer.
class PrefixTest {
public:
    explicit PrefixTest(const Grammar& g) : g_(&g) {}

    bool operator()(const TerminalString& w);
    bool viable(const Path& p, const Token& x);

private:
    const Grammar* g_;
    std::map<TerminalString, bool> memo_;
};

/// W: { x ∈ X_k : some p ∈ P has |p̄| = k and [p x] ∈ L_prefix }.
TokenSet admissible(const Lexer& lexer, std::string_view input, std::size_t k, const PathSet& paths,
                    PrefixTest& prefix);

struct EpsilonCap {
    std::size_t max_run = std::numeric_limits<std::size_t>::max();
    bool hit = false;
};

/// Trailing run of empty tokens in p.
std::size_t trailing_empty_run(const Path& p);

/// Append_k T P = P ∪ { p x : p ∈ P, |p̄| = k, x ∈ T, [p x] ∈ L_prefix }.
PathSet append_tokens(std::size_t k, const TokenSet& tokens, const PathSet& paths, PrefixTest& prefix,
                      EpsilonCap* cap = nullptr);

template <class Set>
struct LimitResult {
    Set value;
    bool truncated = false;
};

/// ⋃ f^n(X) for inflationary f, iterated until f(Y) = Y or `max_rounds`
/// applications have been made.
template <class Set, class F>
LimitResult<Set> limit(F&& f, Set x, std::size_t max_rounds = std::numeric_limits<std::size_t>::max())
{
    for (std::size_t round = 0; round < max_rounds; ++round) {
        Set next = f(x);
        if (next == x)
            return {std::move(x), false};
        x = std::move(next);
    }
    bool grows = f(x) != x;
    return {std::move(x), grows};
}

struct SemanticsTrace {
    struct Position {
        std::vector<TokenSet> admissible; // W_k^0, W_k^1, ...
        std::vector<TokenSet> selected;   // Z_k^0, Z_k^1, ...
        std::vector<PathSet> paths;       // P_k^0, P_k^1, ...
    };
    std::vector<Position> positions;
};

struct SemanticsResult {
    PathSet paths;                  // P = P_{|D|}^∞
    std::vector<TokenSet> selected; // Z_k^∞
    bool truncated = false;
    SemanticsTrace trace;
};

SemanticsResult run_semantics(const Grammar& g, const Lexer& lexer, const Selector& sel, std::string_view input,
                              const OracleConfig& cfg = {});

/// ℓℓ(D): paths of P covering the input whose terminals form a sentence.
PathSet ll_of(const SemanticsResult& result, const Grammar& g, std::string_view input);

/// Definition of validity of an item relative to a path: some split u of p
/// has |p̄| = j, |p̄_0..u-1| = i, start =>* [p_0..u-1] N γ and
/// α =>* [p_u..]. `langs` must be bounded by at least |p|.
bool p_valid(const Grammar& g, const BoundedLanguages& langs, const Item& item, const Path& p);

/// Every item over the input length that is p-valid for some p in `paths`.
ItemSet generated_items(const Grammar& g, const PathSet& paths, std::size_t input_length);

} // namespace locallex

#endif
