#ifndef VTX_CLI_HPP
#define VTX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace vtx {

// Subcommands: validate, dualize, envelope, classical, correlate.
// Reports go to `out` (text or json per --format); errors to `err`.
// Exit codes: 0 all checks pass, 1 some check fails, 2 no failure but
// some check inconclusive, 64 usage or load error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vtx

#endif
