#include "netcent/errors.hpp"

namespace netcent {

void throw_input(const std::string& what) { throw InputError(what); }
void throw_compute(const std::string& what) { throw ComputeError(what); }

} // namespace netcent
