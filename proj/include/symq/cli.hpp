#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symq::cli {

/// Process exit statuses shared by every command.
enum ExitStatus : int {
  kPositive = 0,      // psd, not_sos, identity holds, no negative sample
  kNegative = 1,      // not_psd, inconclusive, identity fails, negative sample
  kPrecondition = 2,  // input outside the operation's domain
  kInputError = 3,    // unreadable file, malformed text, bad arguments
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symq::cli
