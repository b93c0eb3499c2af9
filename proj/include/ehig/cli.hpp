#pragma once
// Command dispatch for the ehig tool, kept callable in-process for tests.
// Exit codes: 0 positive verdict, 1 negative verdict, 2 invalid input.

#include <iosfwd>
#include <string>
#include <vector>

namespace ehig {

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ehig
