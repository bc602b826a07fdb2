#pragma once

// Command-line front end: validate | analyze | dual | subcheck | pair | examples.
// Exit codes: 0 all mandatory checks pass, 1 verification failure (report
// still emitted), 2 parse or usage error, 3 internal inconsistency.

#include <ostream>
#include <string>
#include <vector>

namespace hopf {

// args excludes the program name
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf
