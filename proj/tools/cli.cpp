#include "cli.hpp"

#include "locallex/forest.hpp"
#include "locallex/spec_file.hpp"
#include "locallex/workbench.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace llwb {

using namespace locallex;

namespace {

struct InputArgs {
    std::string spec;
    std::optional<std::string> input;
    bool from_stdin = false;
};

void add_input_args(CLI::App* cmd, InputArgs& a)
{
    cmd->add_option("spec", a.spec, "Grammar spec file")->required();
    cmd->add_option("input", a.input, "Input characters (omit with --stdin)");
    cmd->add_flag("--stdin", a.from_stdin, "Read the input from standard input; one trailing newline is dropped");
}

void add_cap_args(CLI::App* cmd, RunCaps& caps)
{
    cmd->add_option("--max-eps", caps.max_epsilon_iterations,
                    "Longest run of consecutive empty tokens in a path")
        ->capture_default_str();
    cmd->add_option("--max-paths", caps.max_paths, "Path / search budget")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

class Failure {
public:
    Failure(int code, std::string message) : code(code), message(std::move(message)) {}
    int code;
    std::string message;
};

std::string read_input(const InputArgs& a, std::istream& in)
{
    if (a.from_stdin == a.input.has_value())
        throw Failure(usage, "give the input either as an argument or with --stdin");
    if (a.input)
        return *a.input;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    if (!text.empty() && text.back() == '\r')
        text.pop_back();
    return text;
}

std::string printable(char c)
{
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f)
        return std::string("'") + c + "'";
    std::ostringstream s;
    s << "byte 0x" << std::hex << static_cast<int>(u);
    return s.str();
}

// Loads the spec and validates the input against its alphabet.
std::pair<LocalLexing, std::string> prepare(const InputArgs& a, std::istream& in)
{
    std::string input = read_input(a, in);
    try {
        LocalLexing ll = load_spec(a.spec);
        if (auto bad = ll.lexer.first_foreign_char(input))
            throw Failure(spec_error, "input character " + printable(input[*bad]) + " at offset " +
                                          std::to_string(*bad) + " is outside the alphabet " +
                                          describe_chars(ll.lexer.alphabet()));
        return {std::move(ll), std::move(input)};
    } catch (const SpecError& e) {
        throw Failure(spec_error, std::string("spec error: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw Failure(usage, "cannot write '" + path + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Local-lexing grammar workbench", args.empty() ? "llwb" : args.front()};
    app.require_subcommand(1);

    InputArgs input_args;
    RunCaps caps;
    bool dump = false;
    std::optional<std::string> dot_file, json_file;

    auto* recognize = app.add_subcommand("recognize", "Print ACCEPT or REJECT (exit 0 / 1)");
    add_input_args(recognize, input_args);
    recognize->add_flag("--dump-chart", dump, "Also print the item chart and selected tokens");

    auto* tokens = app.add_subcommand("tokens", "Token sequences via the Earley chart");
    add_input_args(tokens, input_args);
    add_cap_args(tokens, caps);

    auto* oracle = app.add_subcommand("oracle", "Token sequences via the reference semantics");
    add_input_args(oracle, input_args);
    add_cap_args(oracle, caps);

    auto* check_cmd = app.add_subcommand("check", "Run both engines; exit 0 iff they agree");
    add_input_args(check_cmd, input_args);
    add_cap_args(check_cmd, caps);

    auto* forest = app.add_subcommand("forest", "Parse forest as DOT (default) and/or JSON");
    add_input_args(forest, input_args);
    forest->add_option("--dot", dot_file, "Write DOT to this file ('-' for stdout)");
    forest->add_option("--json", json_file, "Write the JSON dump to this file ('-' for stdout)");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end()); // CLI11 takes the vector in reverse order
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (recognize->parsed()) {
            auto [ll, input] = prepare(input_args, in);
            const Chart chart = compute_chart(ll.grammar, ll.lexer, ll.selector, input);
            out << (chart.accepted() ? "ACCEPT" : "REJECT") << "\n";
            if (dump)
                out << dump_chart(ll.grammar, chart);
            return chart.accepted() ? ok : rejected;
        }
        if (tokens->parsed() || oracle->parsed()) {
            auto [ll, input] = prepare(input_args, in);
            const EngineResult r = tokens->parsed() ? run_earley(ll, input, caps) : run_oracle(ll, input, caps);
            out << format_paths(ll.grammar, r);
            return ok;
        }
        if (check_cmd->parsed()) {
            auto [ll, input] = prepare(input_args, in);
            const CheckReport rep = locallex::check(ll, input, caps);
            auto line = [&](const char* engine, const EngineResult& r) {
                out << engine << ": " << (r.accepted ? "ACCEPT" : "REJECT") << ", " << r.paths.size()
                    << (r.paths.size() == 1 ? " path" : " paths") << (r.truncated ? " (truncated)" : "") << "\n";
            };
            line("earley", rep.earley);
            line("oracle", rep.oracle);
            if (!rep.acceptance_agrees)
                out << "acceptance: not compared (oracle truncated with no paths)\n";
            if (!rep.paths_agree)
                out << "paths: not compared (truncated)\n";
            if (rep.paths_agree && !*rep.paths_agree) {
                for (const Path& p : canonical_paths(ll.grammar, rep.earley.paths))
                    if (!rep.oracle.paths.contains(p))
                        out << "earley only: " << format_path(ll.grammar, p) << "\n";
                for (const Path& p : canonical_paths(ll.grammar, rep.oracle.paths))
                    if (!rep.earley.paths.contains(p))
                        out << "oracle only: " << format_path(ll.grammar, p) << "\n";
            }
            out << (rep.agree() ? "AGREE" : "DISAGREE") << "\n";
            return rep.agree() ? ok : rejected;
        }
        if (forest->parsed()) {
            auto [ll, input] = prepare(input_args, in);
            const Chart chart = compute_chart(ll.grammar, ll.lexer, ll.selector, input);
            if (!chart.accepted()) {
                err << "REJECT: no parse forest\n";
                return rejected;
            }
            const ParseForest f = build_forest(chart, ll.grammar);
            if (f.cyclic)
                err << "note: the forest is cyclic (empty tokens can be pumped)\n";
            if (!dot_file && !json_file)
                dot_file = "-";
            if (dot_file)
                write_file(*dot_file, to_dot(f, ll.grammar), out);
            if (json_file)
                write_file(*json_file, to_json(f, ll.grammar), out);
            return ok;
        }
    } catch (const Failure& f) {
        err << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return usage;
}

} // namespace llwb
