#pragma once

#include <iosfwd>

namespace lpcert::cli {

/// Exit codes: 0 success/valid, 1 verification failure, 2 usage or input
/// error, 3 infeasible distribution.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpcert::cli
