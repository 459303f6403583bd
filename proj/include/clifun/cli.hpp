#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clifun::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kParse = 2;
inline constexpr int kDomain = 3;
inline constexpr int kRegularization = 4;
inline constexpr int kInternal = 5;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);

}  // namespace clifun::cli
