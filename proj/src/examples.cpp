#include "locallex/examples.hpp"

#include <stdexcept>

namespace locallex::examples {

namespace {

using Rule = GrammarDecl::RuleDecl;
using Terminal = LocalLexingDecl::TerminalDecl;

} // namespace

LocalLexingDecl traditional_decl(const std::string& alphabet,
                                 const std::vector<std::pair<std::string, std::string>>& pairs)
{
    LocalLexingDecl d;
    d.alphabet = alphabet;
    d.rules = {Rule{"S", {"S", "T"}}, Rule{"S", {}}};
    const CharSet sigma = parse_char_class(alphabet);
    for (const auto& [pattern, name] : pairs) {
        if (parse_pattern(pattern, sigma).nullable())
            throw std::invalid_argument("pattern for '" + name + "' matches the empty string");
        d.terminals.push_back(Terminal{name, pattern, MatchMode::longest});
        d.rules.push_back(Rule{"T", {name}});
    }
    d.start = "S";
    d.selector = SelectorMode::longest_then_order;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            d.priorities.push_back({pairs[i].second, pairs[j].second});
    return d;
}

LocalLexing traditional(const std::string& alphabet,
                        const std::vector<std::pair<std::string, std::string>>& pairs)
{
    return build_local_lexing(traditional_decl(alphabet, pairs));
}

LocalLexingDecl infinite_decl()
{
    LocalLexingDecl d;
    d.alphabet = "[a]";
    d.terminals = {Terminal{"t1", "a*", MatchMode::longest}};
    d.rules = {Rule{"S", {"S", "T"}}, Rule{"S", {}}, Rule{"T", {"t1"}}};
    d.start = "S";
    d.selector = SelectorMode::longest_then_order;
    return d;
}

LocalLexing infinite_example() { return build_local_lexing(infinite_decl()); }

LocalLexingDecl grammar_H_decl(int variant)
{
    LocalLexingDecl d;
    d.alphabet = "[+abc-]";
    d.terminals = {
        Terminal{"plus", "\\+", MatchMode::longest},
        Terminal{"minus", "-", MatchMode::longest},
        Terminal{"id", "[abc]+", MatchMode::longest},
        Terminal{"symbol", "[abc-]+", MatchMode::longest},
    };
    d.rules = {
        Rule{"S", {"S", "plus", "A"}},
        Rule{"S", {"S", "minus", "A"}},
        Rule{"S", {"A"}},
        Rule{"A", {"A", "E"}},
        Rule{"A", {"E"}},
        Rule{"E", {"id"}},
        Rule{"E", {"symbol"}},
    };
    d.start = "S";
    switch (variant) {
    case 3:
        d.selector = SelectorMode::none;
        break;
    case 4:
        d.selector = SelectorMode::order;
        d.priorities = {{"symbol", "id"}, {"symbol", "minus"}};
        break;
    case 5:
        d.selector = SelectorMode::longest;
        break;
    case 6:
        d.selector = SelectorMode::longest_then_order;
        d.priorities = {{"symbol", "id"}};
        break;
    default:
        throw std::invalid_argument("grammar H has selector variants 3, 4, 5 and 6 only");
    }
    return d;
}

LocalLexing grammar_H(int variant) { return build_local_lexing(grammar_H_decl(variant)); }

LocalLexingDecl lexer_hack_decl()
{
    LocalLexingDecl d;
    d.alphabet = "[a-z()*]";
    d.terminals = {
        Terminal{"typeid", "[a-z]+", MatchMode::longest},
        Terminal{"id", "[a-z]+", MatchMode::longest},
        Terminal{"asterisk", "\\*", MatchMode::longest},
        Terminal{"left", "\\(", MatchMode::longest},
        Terminal{"right", "\\)", MatchMode::longest},
    };
    d.rules = {
        Rule{"Expr", {"Mul"}},
        Rule{"Expr", {"Cast"}},
        Rule{"Expr", {"Deref"}},
        Rule{"Expr", {"id"}},
        Rule{"Expr", {"left", "Expr", "right"}},
        Rule{"Mul", {"Expr", "asterisk", "Expr"}},
        Rule{"Cast", {"left", "Type", "right", "Expr"}},
        Rule{"Deref", {"asterisk", "Expr"}},
        Rule{"Type", {"typeid"}},
    };
    d.start = "Expr";
    d.selector = SelectorMode::none;
    return d;
}

LocalLexing lexer_hack() { return build_local_lexing(lexer_hack_decl()); }

LocalLexingDecl error_recovery_decl()
{
    LocalLexingDecl d;
    d.alphabet = "[+*()0-9a-z]";
    d.terminals = {
        Terminal{"plus", "\\+", MatchMode::longest},
        Terminal{"mul", "\\*", MatchMode::longest},
        Terminal{"id", "[a-z][a-z0-9]*", MatchMode::longest},
        Terminal{"num", "[0-9]+", MatchMode::longest},
        Terminal{"left", "\\(", MatchMode::longest},
        Terminal{"right", "\\)", MatchMode::longest},
        Terminal{"e-atom", "", MatchMode::longest},
        Terminal{"e-right", "", MatchMode::longest},
        Terminal{"e-superfluous", "\\)", MatchMode::longest},
    };
    d.rules = {
        Rule{"Expr", {"Sum"}},
        Rule{"Sum", {"Sum", "plus", "Mul"}},
        Rule{"Sum", {"Mul"}},
        Rule{"Mul", {"Mul", "mul", "Atom"}},
        Rule{"Mul", {"Atom"}},
        Rule{"Atom", {"left", "Sum", "right"}},
        Rule{"Atom", {"id"}},
        Rule{"Atom", {"num"}},
        Rule{"Mul", {"Mul", "Atom"}},
        Rule{"Mul", {"Mul", "e-superfluous"}},
        Rule{"Atom", {"left", "Sum", "e-right"}},
        Rule{"Atom", {"e-atom"}},
    };
    d.start = "Expr";
    d.selector = SelectorMode::order;
    d.priorities = {{"e-atom", std::nullopt}, {"e-right", std::nullopt}, {"e-superfluous", std::nullopt}};
    return d;
}

LocalLexing error_recovery() { return build_local_lexing(error_recovery_decl()); }

} // namespace locallex::examples
