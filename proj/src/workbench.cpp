#include "locallex/workbench.hpp"

namespace locallex {

EngineResult run_earley(const LocalLexing& ll, std::string_view input, const RunCaps& caps)
{
    const Chart chart = compute_chart(ll.grammar, ll.lexer, ll.selector, input);
    EngineResult r;
    r.accepted = chart.accepted();
    if (r.accepted) {
        ExtractCaps ec;
        ec.max_epsilon_iterations = caps.max_epsilon_iterations;
        ec.max_paths = caps.max_paths;
        Extraction ex = extract_ll(chart, ll.grammar, ec);
        r.paths = std::move(ex.paths);
        r.truncated = ex.truncated;
    }
    return r;
}

EngineResult run_oracle(const LocalLexing& ll, std::string_view input, const RunCaps& caps)
{
    OracleConfig cfg;
    cfg.max_epsilon_iterations = caps.max_epsilon_iterations;
    cfg.max_paths = caps.max_paths;
    const SemanticsResult sem = run_semantics(ll.grammar, ll.lexer, ll.selector, input, cfg);
    EngineResult r;
    r.paths = ll_of(sem, ll.grammar, input);
    r.accepted = !r.paths.empty();
    r.truncated = sem.truncated;
    return r;
}

CheckReport check(const LocalLexing& ll, std::string_view input, const RunCaps& caps)
{
    CheckReport rep;
    rep.earley = run_earley(ll, input, caps);
    rep.oracle = run_oracle(ll, input, caps);
    if (!(rep.oracle.truncated && rep.oracle.paths.empty()))
        rep.acceptance_agrees = rep.earley.accepted == rep.oracle.accepted;
    if (!rep.earley.truncated && !rep.oracle.truncated)
        rep.paths_agree = rep.earley.paths == rep.oracle.paths;
    return rep;
}

std::string format_paths(const Grammar& g, const EngineResult& r)
{
    std::string out;
    for (const Path& p : canonical_paths(g, r.paths))
        out += format_path(g, p) + "\n";
    if (r.truncated)
        out += "# TRUNCATED\n";
    return out;
}

} // namespace locallex
