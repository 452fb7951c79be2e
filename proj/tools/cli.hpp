#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbent::cli {

/// Exit status: 0 property holds, 1 property fails, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbent::cli
