#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opo::cli {

enum ExitCode : int { Holds = 0, Refuted = 1, UsageError = 2 };

// args excludes the program name. Graph arguments given as "-" are read
// from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace opo::cli
