#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagthue::cli {

// Exit codes: 0 success, 1 domain error (JSON on `err`), 2 usage error.
// `verify-lemmas` also exits 1 when any verdict is VIOLATED.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagthue::cli
