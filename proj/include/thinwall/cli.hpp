#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thinwall/multigraph.hpp"
#include "thinwall/treecut.hpp"

namespace thinwall {

/// Exit codes: 0 affirmative, 1 negative, 2 inconclusive (cap or timeout), 3 input error.
enum ExitCode { kExitYes = 0, kExitNo = 1, kExitInconclusive = 2, kExitInputError = 3 };

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Tree as a DOT graph, each node labelled with its part.
std::string tcd_to_dot(const Multigraph& g, const TreeCutDecomposition& d);

}  // namespace thinwall
