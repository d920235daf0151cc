#ifndef GJ_CLI_HPP
#define GJ_CLI_HPP

#include <string>
#include <vector>

namespace gj::cli {

struct RunResult {
    std::string out; // stdout payload (report JSON or CSV)
    std::string err; // diagnostics
    int code = 0;    // 0 ok, 2 malformed input, 3 domain precondition, 4 resource ceiling
};

/// Executes one workbench command. argv excludes the program name.
/// Identical inputs produce byte-identical output.
RunResult run(const std::vector<std::string>& argv);

} // namespace gj::cli

#endif
