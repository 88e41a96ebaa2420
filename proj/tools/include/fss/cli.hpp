#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fss {

// Command line entry point; args excludes the program name.  Streams stand
// in for stdin/stdout/stderr so the tool can be driven in-process.  Returns
// 0 on success or a true relation, 1 on a false relation (or an exhausted
// counterexample search), 2 on any error.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace fss
