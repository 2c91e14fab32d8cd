#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fc::cli {

// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fc::cli
