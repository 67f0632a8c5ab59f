#pragma once

#include <iosfwd>
#include <string_view>

#include "lingagree/intervals.hpp"

namespace lingagree::cli {

enum ExitCode : int {
  kOk = 0,
  kDataError = 1,
  kUsageError = 2,
};

// One `l,r` interval per line; blank lines and `#` comments are ignored.
IntervalCollection read_interval_list(std::istream& in, std::string_view source_name);

// Entry point shared by main() and the tests. Subcommands: gamma, build,
// attrs, report, series.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lingagree::cli
