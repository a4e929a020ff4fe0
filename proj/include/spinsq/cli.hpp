// cli.hpp
// Entry point for the `spinsq` command line tool, callable in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinsq::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kNumerical = 3,
    kIo = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "2..20,50,100" -> {2, ..., 20, 50, 100}. Throws DomainError on bad syntax.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace spinsq::cli
