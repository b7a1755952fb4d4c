#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace golden::cli {

// Exit codes: 0 success, 1 domain error (code printed to err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

// Figures `repro` knows, in output order.
const std::vector<std::string>& figure_names();

}  // namespace golden::cli
