#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foldcat::cli {

/// Runs one command line (without the program name). Exit codes:
/// 0 verified or computed, 1 counterexample found (witness printed),
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foldcat::cli
