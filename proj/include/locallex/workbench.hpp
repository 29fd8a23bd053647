#ifndef LOCALLEX_WORKBENCH_HPP
#define LOCALLEX_WORKBENCH_HPP

// Shared driver for the command-line tool and the test suites: runs either
// engine on one input with common caps and compares the results.

#include "locallex/earley.hpp"
#include "locallex/local_lexing.hpp"
#include "locallex/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace locallex {

struct RunCaps {
    std::size_t max_epsilon_iterations = 8;
    std::size_t max_paths = 100'000;
};

struct EngineResult {
    bool accepted = false;
    PathSet paths; // ℓℓ(input), possibly cut off by the caps
    bool truncated = false;
};

/// Chart, then token-sequence extraction.
EngineResult run_earley(const LocalLexing& ll, std::string_view input, const RunCaps& caps = {});
/// Direct evaluation of the semantics equations; accepted iff ℓℓ is nonempty.
EngineResult run_oracle(const LocalLexing& ll, std::string_view input, const RunCaps& caps = {});

struct CheckReport {
    EngineResult earley;
    EngineResult oracle;
    /// Set unless a truncated, empty oracle result makes acceptance inconclusive.
    std::optional<bool> acceptance_agrees;
    /// Set when neither run was truncated.
    std::optional<bool> paths_agree;

    bool agree() const { return acceptance_agrees.value_or(true) && paths_agree.value_or(true); }
};

CheckReport check(const LocalLexing& ll, std::string_view input, const RunCaps& caps = {});

/// One path per line in canonical order, then `# TRUNCATED` if capped.
std::string format_paths(const Grammar& g, const EngineResult& r);

} // namespace locallex

#endif
