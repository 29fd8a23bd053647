#ifndef LOCALLEX_FOREST_HPP
#define LOCALLEX_FOREST_HPP

#include "locallex/earley.hpp"
#include "locallex/grammar.hpp"
#include "locallex/token.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace locallex {

class ForestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by tree enumeration and counting on forests that contain a cycle
/// (ε-token pumping through a nullable recursion).
class ForestCycleError : public ForestError {
public:
    using ForestError::ForestError;
};

struct ForestNode {
    enum class Kind : std::uint8_t { symbol, token, family };

    Kind kind = Kind::symbol;
    SymbolId symbol = 0;  // symbol nodes: the nonterminal; token leaves: the terminal
    std::size_t rule = 0; // family nodes
    Token token;          // token leaves
    std::size_t begin = 0;
    std::size_t end = 0;
    /// symbol -> family nodes; family -> one symbol node or token leaf per
    /// right-hand-side symbol; token -> none.
    std::vector<std::size_t> children;
};

struct ParseForest {
    std::vector<ForestNode> nodes;
    std::size_t root = 0;
    bool cyclic = false;

    bool ambiguous(std::size_t node) const
    {
        return nodes.at(node).kind == ForestNode::Kind::symbol && nodes[node].children.size() >= 2;
    }
};

/// Packed forest over the completed items of an accepted chart. Nodes are
/// shared per (symbol, i, j); families are ordered by rule, then by split
/// points. Throws ForestError if the chart did not accept.
ParseForest build_forest(const Chart& chart, const Grammar& g);

struct ParseTree {
    bool leaf = false;
    SymbolId symbol = 0;
    std::size_t rule = 0;
    Token token;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::vector<ParseTree> children;

    friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

struct TreeEnumeration {
    std::vector<ParseTree> trees;
    /// True when every tree of the forest is listed.
    bool complete = true;
};

/// At most `max` trees (max >= 1), leftmost split first and families in rule
/// order. Throws ForestCycleError on cyclic forests.
TreeEnumeration enumerate_trees(const ParseForest& f, std::size_t max);

/// Number of trees, saturating at the largest uint64 value. Throws
/// ForestCycleError on cyclic forests.
std::uint64_t count_trees(const ParseForest& f);

/// The token sequence at the leaves.
Path tree_leaves(const ParseTree& t);

std::string format_tree(const Grammar& g, const ParseTree& t);

/// Graphviz rendering: symbol nodes labelled by name, token leaves as
/// chars over terminal (ε for empty tokens), dashed edges from ambiguity nodes
/// to point-shaped family nodes.
std::string to_dot(const ParseForest& f, const Grammar& g);

/// {"v":1,"root":r,"cyclic":b,"nodes":[{"kind":...,"span":[i,j],"children":[...]}, ...]}
std::string to_json(const ParseForest& f, const Grammar& g);

} // namespace locallex

#endif
