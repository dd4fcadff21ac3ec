#pragma once

// Command-line front door. Exit codes: 0 success / all checks pass,
// 1 verification failure, 2 usage or input-parse error.

#include <iosfwd>
#include <string>
#include <vector>

namespace moonshine::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace moonshine::cli
