#pragma once

// Command-line front end.  run_cli takes a full argv-style vector (program
// name first) and writes reports to `out` and one-line diagnostics to `err`.
// Exit status: 0 success / predicate holds, 1 predicate false or theorem
// violated, 2 usage, parse or validation errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace latprim {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace latprim
