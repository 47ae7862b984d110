#pragma once

#include <stdexcept>
#include <string>

namespace netcent {

/// Bad input: malformed files, invalid parameters, or a metric applied to a
/// graph kind it is not defined on.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation that could not produce a result (non-convergence, singular
/// systems, degenerate data).
class ComputeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] void throw_input(const std::string& what);
[[noreturn]] void throw_compute(const std::string& what);

} // namespace netcent
