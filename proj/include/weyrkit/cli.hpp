#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyrkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kInputError = 2,
    kNotSimilar = 3,
    kIrrationalSpectrum = 4,
};

// Runs one command line (args excludes the program name). Output is
// deterministic for identical inputs and flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyrkit::cli
