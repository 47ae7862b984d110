#pragma once

#include <iosfwd>

namespace netcent {

/// Runs the command line; returns 0 on success, 1 on input errors, 2 on computation errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace netcent
