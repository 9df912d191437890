#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace betticone {

// Dispatches the subcommand CLI. args excludes the program name. Returns 0
// on success, 1 on usage or input errors, 2 when a survey found violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betticone
