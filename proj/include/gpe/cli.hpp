#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpe {

// Command-line entry point, exposed for tests. Exit status: 0 success,
// 1 verification failure, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace gpe
