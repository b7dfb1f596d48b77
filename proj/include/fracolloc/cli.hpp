#ifndef FRACOLLOC_CLI_HPP
#define FRACOLLOC_CLI_HPP

#include <string>
#include <vector>

namespace fracolloc {

/// Command-line driver. Returns the process exit code:
/// 0 success, 2 invalid parameters, 3 numerical failure (node-search blow-up,
/// non-convergence). Set FRACOLLOC_LOG for progress output on stderr.
int run_cli(const std::vector<std::string>& args);

}  // namespace fracolloc

#endif
