#include "xiform/errors.hpp"

namespace xiform {

void throw_internal(const std::string& what) { throw InternalError("xiform internal error: " + what); }

}  // namespace xiform
