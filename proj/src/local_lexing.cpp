#include "locallex/local_lexing.hpp"

#include <algorithm>

namespace locallex {

LocalLexing build_local_lexing(const LocalLexingDecl& decl)
{
    GrammarDecl g;
    for (const auto& t : decl.terminals)
        g.terminals.push_back(t.name);
    for (const auto& r : decl.rules)
        if (std::find(g.nonterminals.begin(), g.nonterminals.end(), r.lhs) == g.nonterminals.end())
            g.nonterminals.push_back(r.lhs);
    g.rules = decl.rules;
    g.start = !decl.start.empty() ? decl.start : decl.rules.empty() ? std::string() : decl.rules.front().lhs;
    Grammar grammar = Grammar::build(g);

    const CharSet alphabet = parse_char_class(decl.alphabet);
    std::vector<TerminalRecognizer> recognizers;
    for (const auto& t : decl.terminals) {
        try {
            recognizers.push_back(compile_pattern(parse_pattern(t.pattern, alphabet), alphabet, t.mode));
        } catch (const PatternError& e) {
            throw PatternError("terminal '" + t.name + "': " + e.what());
        }
    }
    Lexer lexer(alphabet, std::move(recognizers));

    std::vector<OrderEdge> edges;
    for (const auto& p : decl.priorities) {
        auto terminal = [&](const std::string& name) {
            auto id = grammar.find_terminal(name);
            if (!id)
                throw SelectorError("priority names '" + name + "', which is not a terminal");
            return *id;
        };
        OrderEdge e{terminal(p.lower), std::nullopt};
        if (p.upper)
            e.upper = terminal(*p.upper);
        edges.push_back(e);
    }
    Selector selector(grammar, decl.selector, edges);
    return LocalLexing{std::move(grammar), std::move(lexer), std::move(selector)};
}

} // namespace locallex
