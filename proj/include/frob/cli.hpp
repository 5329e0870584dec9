// Command-line frontend. Every response is one JSON object on `out` with
// sorted keys: the result fields plus "subcommand", "params" and
// "diagnostics". Exit code 0 iff no error diagnostic was emitted; unknown
// subcommands print usage to `err` and return 2.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace frob::cli
