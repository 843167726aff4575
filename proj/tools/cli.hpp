#pragma once

#include <ostream>

namespace pdg::cli {

/// Runs the pdgenus command line. Exit codes: 0 ok, 1 usage or input error,
/// 2 a check found a violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdg::cli
