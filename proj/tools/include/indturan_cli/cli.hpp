#pragma once

#include <string>
#include <vector>

namespace indturan::cli {

// Runs one subcommand. args[0] is the program name. Returns 0 when a
// witness or value was produced, 1 for a not-found outcome, 2 for usage and
// precondition errors.
int dispatch(const std::vector<std::string>& args);
int dispatch(int argc, const char* const* argv);

// Lower-case hex SHA-256 of a file's bytes. Throws Error(Io).
std::string sha256_file(const std::string& path);

}  // namespace indturan::cli
