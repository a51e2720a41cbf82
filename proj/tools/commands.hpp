#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkig::cli {

enum ExitCode : int {
    kOk = 0,
    kSuiteFailure = 1,
    kInvalidIndex = 2,
    kUnsupportedFamily = 3,
};

// Environment variable supplying the default for `verify --seed`.
inline constexpr const char* kSeedEnv = "QKIG_SEED";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qkig::cli
