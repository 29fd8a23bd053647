#ifndef LLWB_CLI_HPP
#define LLWB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace llwb {

enum ExitCode : int {
    ok = 0,
    rejected = 1, // recognize: REJECT; check: engines disagree; forest: no parse
    usage = 2,
    spec_error = 3, // unreadable/invalid spec, or input outside the alphabet
    internal_error = 4,
};

/// Runs the workbench with argv-style arguments (args[0] is the program
/// name). `in` serves --stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace llwb

#endif
