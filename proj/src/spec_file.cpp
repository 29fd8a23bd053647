#include "locallex/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace locallex {

namespace {

struct Located {
    LocalLexingDecl decl;
    std::size_t alphabet_line = 0;
    std::size_t start_line = 0;
    std::vector<std::size_t> terminal_lines;
    std::vector<std::size_t> rule_lines;
    std::vector<std::size_t> priority_lines;
};

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string> words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

// Drops a trailing comment: a `#` at the start or after whitespace.
std::string_view strip_comment(std::string_view s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '#' && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t'))
            return s.substr(0, i);
    return s;
}

bool is_name(std::string_view s)
{
    if (s.empty() || s == "ε" || s == "|" || s == "->" || s == "<" || s == "*")
        return false;
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '/' || c == '#')
            return false;
    return true;
}

void parse_terminal(std::string_view rest, std::size_t line, Located& out)
{
    rest = trim(rest);
    const auto sp = rest.find_first_of(" \t");
    if (sp == std::string_view::npos)
        throw SpecError(line, "expected `terminal <name> /<pattern>/ [longest|all]`");
    const std::string name(rest.substr(0, sp));
    if (!is_name(name))
        throw SpecError(line, "invalid terminal name '" + name + "'");
    rest = trim(rest.substr(sp));
    if (rest.empty() || rest[0] != '/')
        throw SpecError(line, "terminal '" + name + "': pattern must be written between slashes");
    std::size_t i = 1;
    while (i < rest.size() && rest[i] != '/')
        i += rest[i] == '\\' ? 2 : 1;
    if (i >= rest.size())
        throw SpecError(line, "terminal '" + name + "': unterminated pattern");
    std::string pattern;
    for (std::size_t k = 1; k < i; ++k) {
        if (rest[k] == '\\' && k + 1 < i && rest[k + 1] == '/') {
            pattern += '/';
            ++k;
        } else {
            pattern += rest[k];
        }
    }
    const auto tail = words(strip_comment(rest.substr(i + 1)));
    MatchMode mode = MatchMode::longest;
    if (tail.size() > 1)
        throw SpecError(line, "terminal '" + name + "': unexpected '" + tail[1] + "'");
    if (tail.size() == 1) {
        if (tail[0] == "all")
            mode = MatchMode::all;
        else if (tail[0] != "longest")
            throw SpecError(line, "terminal '" + name + "': unknown match mode '" + tail[0] +
                                      "' (expected longest or all)");
    }
    out.decl.terminals.push_back({name, pattern, mode});
    out.terminal_lines.push_back(line);
}

void parse_rule(const std::vector<std::string>& w, std::size_t line, Located& out)
{
    if (w.size() < 3 || w[2] != "->")
        throw SpecError(line, "expected `rule <N> -> <symbols> | ...`");
    if (!is_name(w[1]))
        throw SpecError(line, "invalid nonterminal name '" + w[1] + "'");
    std::vector<std::string> rhs;
    auto flush = [&] {
        out.decl.rules.push_back({w[1], rhs});
        out.rule_lines.push_back(line);
        rhs.clear();
    };
    bool saw_epsilon = false;
    for (std::size_t i = 3; i < w.size(); ++i) {
        if (w[i] == "|") {
            flush();
            saw_epsilon = false;
        } else if (w[i] == "ε") {
            if (!rhs.empty() || saw_epsilon)
                throw SpecError(line, "ε must stand alone in an alternative");
            saw_epsilon = true;
        } else {
            if (saw_epsilon)
                throw SpecError(line, "ε must stand alone in an alternative");
            if (!is_name(w[i]))
                throw SpecError(line, "invalid symbol '" + w[i] + "'");
            rhs.push_back(w[i]);
        }
    }
    flush();
}

Located parse_located(std::string_view text)
{
    Located out;
    bool have_selector = false;
    std::size_t line = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line;
        const std::string_view body = trim(raw);
        if (body.empty() || body[0] == '#')
            continue;
        const auto first_space = body.find_first_of(" \t");
        const std::string keyword(body.substr(0, first_space));
        const std::string_view rest =
            first_space == std::string_view::npos ? std::string_view() : body.substr(first_space);

        if (keyword == "terminal") {
            parse_terminal(rest, line, out);
            continue;
        }
        const auto w = words(strip_comment(body));
        if (keyword == "alphabet") {
            if (out.alphabet_line)
                throw SpecError(line, "alphabet already declared on line " + std::to_string(out.alphabet_line));
            const std::string_view cls = trim(strip_comment(rest));
            if (cls.size() < 2 || cls.front() != '[' || cls.back() != ']')
                throw SpecError(line, "expected `alphabet [<characters>]`");
            out.decl.alphabet = std::string(cls);
            out.alphabet_line = line;
        } else if (keyword == "selector") {
            if (have_selector)
                throw SpecError(line, "selector already declared");
            if (w.size() != 2)
                throw SpecError(line, "expected `selector <none|order|longest|longest-then-order>`");
            auto mode = parse_selector_mode(w[1]);
            if (!mode)
                throw SpecError(line, "unknown selector '" + w[1] + "'");
            out.decl.selector = *mode;
            have_selector = true;
        } else if (keyword == "priority") {
            if (w.size() != 4 || w[2] != "<")
                throw SpecError(line, "expected `priority <terminal> < <terminal|*>`");
            LocalLexingDecl::PriorityDecl p{w[1], std::nullopt};
            if (w[3] != "*")
                p.upper = w[3];
            out.decl.priorities.push_back(p);
            out.priority_lines.push_back(line);
        } else if (keyword == "rule") {
            parse_rule(w, line, out);
        } else if (keyword == "start") {
            if (out.start_line)
                throw SpecError(line, "start already declared on line " + std::to_string(out.start_line));
            if (w.size() != 2)
                throw SpecError(line, "expected `start <nonterminal>`");
            out.decl.start = w[1];
            out.start_line = line;
        } else {
            throw SpecError(line, "unknown declaration '" + keyword + "'");
        }
    }
    return out;
}

} // namespace

LocalLexingDecl parse_spec_decl(std::string_view text) { return parse_located(text).decl; }

LocalLexing parse_spec(std::string_view text)
{
    Located spec = parse_located(text);
    const LocalLexingDecl& d = spec.decl;

    if (!spec.alphabet_line)
        throw SpecError(0, "missing `alphabet` declaration");
    if (d.rules.empty())
        throw SpecError(0, "no rules declared");
    CharSet alphabet;
    try {
        alphabet = parse_char_class(d.alphabet);
    } catch (const PatternError& e) {
        throw SpecError(spec.alphabet_line, e.what());
    }

    std::set<std::string> terminals, nonterminals;
    for (std::size_t i = 0; i < d.terminals.size(); ++i)
        if (!terminals.insert(d.terminals[i].name).second)
            throw SpecError(spec.terminal_lines[i], "terminal '" + d.terminals[i].name + "' declared twice");
    for (std::size_t i = 0; i < d.rules.size(); ++i) {
        if (terminals.contains(d.rules[i].lhs))
            throw SpecError(spec.rule_lines[i], "'" + d.rules[i].lhs + "' is a terminal and cannot have rules");
        nonterminals.insert(d.rules[i].lhs);
    }
    for (std::size_t i = 0; i < d.rules.size(); ++i)
        for (const auto& s : d.rules[i].rhs)
            if (!terminals.contains(s) && !nonterminals.contains(s))
                throw SpecError(spec.rule_lines[i], "rule for '" + d.rules[i].lhs + "' uses undeclared symbol '" +
                                                        s + "'");
    if (spec.start_line && !nonterminals.contains(d.start))
        throw SpecError(spec.start_line, "start symbol '" + d.start + "' has no rules");

    for (std::size_t i = 0; i < d.terminals.size(); ++i) {
        try {
            compile_pattern(parse_pattern(d.terminals[i].pattern, alphabet), alphabet, d.terminals[i].mode);
        } catch (const PatternError& e) {
            throw SpecError(spec.terminal_lines[i], "terminal '" + d.terminals[i].name + "': " + e.what());
        }
    }
    for (std::size_t i = 0; i < d.priorities.size(); ++i) {
        const auto& p = d.priorities[i];
        for (const auto* name : {&p.lower, p.upper ? &*p.upper : nullptr})
            if (name && !terminals.contains(*name))
                throw SpecError(spec.priority_lines[i], "priority names '" + *name + "', which is not a terminal");
    }

    // Locate the declaration that closes a priority cycle, if any.
    for (std::size_t m = 1; m <= d.priorities.size(); ++m) {
        LocalLexingDecl prefix = d;
        prefix.priorities.resize(m);
        try {
            build_local_lexing(prefix);
        } catch (const SelectorError& e) {
            throw SpecError(spec.priority_lines[m - 1], e.what());
        }
    }
    try {
        return build_local_lexing(d);
    } catch (const std::exception& e) {
        throw SpecError(0, e.what());
    }
}

LocalLexing load_spec(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SpecError(0, "cannot read spec file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_spec(text.str());
    } catch (const SpecError& e) {
        throw SpecError(0, path.filename().string() + ": " + e.what());
    }
}

} // namespace locallex
