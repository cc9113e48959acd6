// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace coqam {

/// Command-line front end. Subcommands: design-pulse, check, simulate,
/// verify-paper. Exit codes: 0 success/pass, 1 verification failure,
/// 2 usage error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

} // namespace coqam
