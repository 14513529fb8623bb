#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zelcalc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kEngine = 3, kFailed = 4 };

// Runs one command line (without the program name). JSON goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zelcalc::cli
