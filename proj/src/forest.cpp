#include "locallex/forest.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace locallex {

namespace {

using Span = std::tuple<SymbolId, std::size_t, std::size_t>;

class Builder {
public:
    Builder(const Chart& chart, const Grammar& g) : chart_(chart), g_(g), input_(chart.input())
    {
        for (const Item& item : chart.items()) {
            const Rule& r = g.rule(item.rule);
            if (item.dot == r.rhs.size())
                completed_.emplace(r.lhs, item.origin, item.bin);
        }
    }

    ParseForest run()
    {
        const std::size_t n = input_.size();
        if (!chart_.accepted())
            throw ForestError("the chart has no finished start item; there is no forest");
        forest_.root = symbol_node(g_.start(), 0, n);
        forest_.cyclic = has_cycle();
        return std::move(forest_);
    }

private:
    std::size_t symbol_node(SymbolId sym, std::size_t i, std::size_t j)
    {
        if (auto it = symbols_.find({sym, i, j}); it != symbols_.end())
            return it->second;
        const std::size_t index = forest_.nodes.size();
        ForestNode node;
        node.kind = ForestNode::Kind::symbol;
        node.symbol = sym;
        node.begin = i;
        node.end = j;
        forest_.nodes.push_back(std::move(node));
        symbols_.emplace(Span{sym, i, j}, index);

        for (std::size_t ri : g_.rules_for(sym)) {
            const Rule& r = g_.rule(ri);
            if (!chart_.contains(make_item(ri, r.rhs.size(), i, j)))
                continue;
            std::vector<std::vector<std::size_t>> splits;
            std::vector<std::size_t> points(r.rhs.size() + 1);
            points[r.rhs.size()] = j;
            collect_splits(ri, r.rhs.size(), i, points, splits);
            std::sort(splits.begin(), splits.end());
            for (const auto& s : splits) {
                std::vector<std::size_t> children;
                for (std::size_t l = 0; l < r.rhs.size(); ++l) {
                    const SymbolId y = r.rhs[l];
                    children.push_back(g_.is_terminal(y) ? token_node(y, s[l], s[l + 1])
                                                         : symbol_node(y, s[l], s[l + 1]));
                }
                ForestNode fam;
                fam.kind = ForestNode::Kind::family;
                fam.symbol = sym;
                fam.rule = ri;
                fam.begin = i;
                fam.end = j;
                fam.children = std::move(children);
                forest_.nodes.push_back(std::move(fam));
                forest_.nodes[index].children.push_back(forest_.nodes.size() - 1);
            }
        }
        return index;
    }

    // Split points s_0 = i <= ... <= s_m = j, chosen right to left; each prefix
    // item (rule, l, i, s_l) must be in the chart.
    void collect_splits(std::size_t ri, std::size_t l, std::size_t i, std::vector<std::size_t>& points,
                        std::vector<std::vector<std::size_t>>& out)
    {
        const std::size_t e = points[l];
        if (l == 0) {
            if (e == i)
                out.push_back(points);
            return;
        }
        const SymbolId y = g_.rule(ri).rhs[l - 1];
        for (std::size_t s = i; s <= e; ++s) {
            if (!chart_.contains(make_item(ri, l - 1, i, s)))
                continue;
            const bool fits = g_.is_terminal(y) ? chart_.tokens(s).contains(Token{y, std::string(input_.substr(s, e - s))})
                                                : completed_.contains({y, s, e});
            if (!fits)
                continue;
            points[l - 1] = s;
            collect_splits(ri, l - 1, i, points, out);
        }
    }

    std::size_t token_node(SymbolId t, std::size_t i, std::size_t j)
    {
        if (auto it = tokens_.find({t, i, j}); it != tokens_.end())
            return it->second;
        ForestNode node;
        node.kind = ForestNode::Kind::token;
        node.symbol = t;
        node.token = Token{t, std::string(input_.substr(i, j - i))};
        node.begin = i;
        node.end = j;
        forest_.nodes.push_back(std::move(node));
        tokens_.emplace(Span{t, i, j}, forest_.nodes.size() - 1);
        return forest_.nodes.size() - 1;
    }

    bool has_cycle() const
    {
        enum : std::uint8_t { white, grey, black };
        std::vector<std::uint8_t> colour(forest_.nodes.size(), white);
        std::function<bool(std::size_t)> visit = [&](std::size_t v) {
            colour[v] = grey;
            for (std::size_t c : forest_.nodes[v].children) {
                if (colour[c] == grey || (colour[c] == white && visit(c)))
                    return true;
            }
            colour[v] = black;
            return false;
        };
        return visit(forest_.root);
    }

    const Chart& chart_;
    const Grammar& g_;
    std::string_view input_;
    std::set<Span> completed_;
    std::map<Span, std::size_t> symbols_;
    std::map<Span, std::size_t> tokens_;
    ParseForest forest_;
};

void require_acyclic(const ParseForest& f)
{
    if (f.cyclic)
        throw ForestCycleError("the forest is cyclic (empty tokens can be pumped); it has infinitely many trees");
}

class TreeLister {
public:
    TreeLister(const ParseForest& f, std::size_t max) : f_(f), max_(max), memo_(f.nodes.size()) {}

    const TreeEnumeration& trees(std::size_t v)
    {
        auto& slot = memo_[v];
        if (slot)
            return *slot;
        TreeEnumeration out;
        const ForestNode& node = f_.nodes[v];
        switch (node.kind) {
        case ForestNode::Kind::token: {
            ParseTree t;
            t.leaf = true;
            t.symbol = node.symbol;
            t.token = node.token;
            t.begin = node.begin;
            t.end = node.end;
            out.trees.push_back(std::move(t));
            break;
        }
        case ForestNode::Kind::symbol:
            for (std::size_t fam : node.children) {
                const TreeEnumeration& sub = trees(fam);
                out.complete = out.complete && sub.complete;
                for (const ParseTree& t : sub.trees) {
                    if (out.trees.size() == max_) {
                        out.complete = false;
                        break;
                    }
                    out.trees.push_back(t);
                }
            }
            break;
        case ForestNode::Kind::family: {
            std::vector<const TreeEnumeration*> parts;
            for (std::size_t c : node.children) {
                parts.push_back(&trees(c));
                out.complete = out.complete && parts.back()->complete;
            }
            std::vector<std::size_t> pick(parts.size(), 0);
            if (std::any_of(parts.begin(), parts.end(), [](auto* p) { return p->trees.empty(); }))
                break;
            for (;;) {
                if (out.trees.size() == max_) {
                    out.complete = false;
                    break;
                }
                ParseTree t;
                t.symbol = node.symbol;
                t.rule = node.rule;
                t.begin = node.begin;
                t.end = node.end;
                for (std::size_t l = 0; l < parts.size(); ++l)
                    t.children.push_back(parts[l]->trees[pick[l]]);
                out.trees.push_back(std::move(t));
                // Odometer with the last child varying fastest.
                std::size_t l = parts.size();
                while (l > 0 && ++pick[l - 1] == parts[l - 1]->trees.size())
                    pick[--l] = 0;
                if (l == 0)
                    break;
            }
            break;
        }
        }
        slot = std::move(out);
        return *slot;
    }

private:
    const ParseForest& f_;
    std::size_t max_;
    std::vector<std::optional<TreeEnumeration>> memo_;
};

std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

ParseForest build_forest(const Chart& chart, const Grammar& g) { return Builder(chart, g).run(); }

TreeEnumeration enumerate_trees(const ParseForest& f, std::size_t max)
{
    if (max == 0)
        throw std::invalid_argument("enumerate_trees needs max >= 1");
    require_acyclic(f);
    TreeLister lister(f, max);
    return lister.trees(f.root);
}

std::uint64_t count_trees(const ParseForest& f)
{
    require_acyclic(f);
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::optional<std::uint64_t>> memo(f.nodes.size());
    std::function<std::uint64_t(std::size_t)> count = [&](std::size_t v) -> std::uint64_t {
        if (memo[v])
            return *memo[v];
        const ForestNode& node = f.nodes[v];
        std::uint64_t n = 0;
        switch (node.kind) {
        case ForestNode::Kind::token:
            n = 1;
            break;
        case ForestNode::Kind::symbol:
            for (std::size_t c : node.children) {
                const std::uint64_t k = count(c);
                n = k > cap - n ? cap : n + k;
            }
            break;
        case ForestNode::Kind::family:
            n = 1;
            for (std::size_t c : node.children) {
                const std::uint64_t k = count(c);
                n = (k != 0 && n > cap / k) ? cap : n * k;
            }
            break;
        }
        memo[v] = n;
        return n;
    };
    return count(f.root);
}

Path tree_leaves(const ParseTree& t)
{
    Path out;
    std::function<void(const ParseTree&)> walk = [&](const ParseTree& n) {
        if (n.leaf)
            out.push_back(n.token);
        for (const ParseTree& c : n.children)
            walk(c);
    };
    walk(t);
    return out;
}

std::string format_tree(const Grammar& g, const ParseTree& t)
{
    if (t.leaf)
        return format_token(g, t.token);
    std::string out = "(" + g.name(t.symbol);
    for (const ParseTree& c : t.children)
        out += " " + format_tree(g, c);
    return out + ")";
}

std::string to_dot(const ParseForest& f, const Grammar& g)
{
    std::ostringstream out;
    out << "digraph forest {\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    auto name = [](std::size_t v) { return "n" + std::to_string(v); };

    std::vector<bool> shown(f.nodes.size(), false);
    std::vector<std::size_t> stack{f.root};
    shown[f.root] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t c : f.nodes[v].children)
            if (!shown[c]) {
                shown[c] = true;
                stack.push_back(c);
            }
    }

    std::vector<bool> drawn_family(f.nodes.size(), false);
    for (std::size_t v = 0; v < f.nodes.size(); ++v)
        if (shown[v] && f.ambiguous(v))
            for (std::size_t fam : f.nodes[v].children)
                drawn_family[fam] = true;

    std::ostringstream edges;
    for (std::size_t v = 0; v < f.nodes.size(); ++v) {
        if (!shown[v])
            continue;
        const ForestNode& node = f.nodes[v];
        const std::string span = "[" + std::to_string(node.begin) + "," + std::to_string(node.end) + ")";
        switch (node.kind) {
        case ForestNode::Kind::symbol:
            out << "  " << name(v) << " [label=\"" << dot_escape(g.name(node.symbol)) << "\", tooltip=\""
                << dot_escape(g.name(node.symbol)) << " " << span << "\"];\n";
            if (f.ambiguous(v)) {
                for (std::size_t fam : node.children)
                    edges << "  " << name(v) << " -> " << name(fam) << " [style=dashed];\n";
            } else {
                for (std::size_t fam : node.children)
                    for (std::size_t c : f.nodes[fam].children)
                        edges << "  " << name(v) << " -> " << name(c) << ";\n";
            }
            break;
        case ForestNode::Kind::token: {
            const std::string chars = node.token.empty() ? "ε" : node.token.chars;
            out << "  " << name(v) << " [shape=plaintext, label=\"" << dot_escape(chars) << "\\n"
                << dot_escape(g.name(node.symbol)) << "\", tooltip=\"" << span << "\"];\n";
            break;
        }
        case ForestNode::Kind::family: {
            // Only families of ambiguity nodes are drawn; others are inlined.
            if (!drawn_family[v])
                break;
            out << "  " << name(v) << " [shape=point, tooltip=\"" << dot_escape(g.rule_string(node.rule))
                << "\"];\n";
            for (std::size_t c : node.children)
                edges << "  " << name(v) << " -> " << name(c) << ";\n";
            break;
        }
        }
    }
    out << edges.str() << "}\n";
    return out.str();
}

std::string to_json(const ParseForest& f, const Grammar& g)
{
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < f.nodes.size(); ++v) {
        const ForestNode& node = f.nodes[v];
        nlohmann::ordered_json j;
        j["id"] = v;
        switch (node.kind) {
        case ForestNode::Kind::symbol:
            j["kind"] = "symbol";
            j["symbol"] = g.name(node.symbol);
            break;
        case ForestNode::Kind::token:
            j["kind"] = "token";
            j["terminal"] = g.name(node.symbol);
            j["chars"] = node.token.chars;
            break;
        case ForestNode::Kind::family:
            j["kind"] = "family";
            j["rule"] = node.rule;
            j["production"] = g.rule_string(node.rule);
            break;
        }
        j["span"] = {node.begin, node.end};
        j["children"] = node.children;
        nodes.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["v"] = 1;
    doc["root"] = f.root;
    doc["cyclic"] = f.cyclic;
    doc["nodes"] = std::move(nodes);
    return doc.dump() + "\n";
}

} // namespace locallex
