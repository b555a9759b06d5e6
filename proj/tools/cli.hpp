#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unref::cli {

// args excludes the program name. Exit codes: 0 success / pass,
// 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// UNREF_JOBS if set to a positive integer, else 1
unsigned default_jobs();

} // namespace unref::cli
