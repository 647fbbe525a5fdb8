#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edgereg::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2, kCapExceeded = 3 };

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Process environment.
std::optional<std::string> system_env(const std::string& name);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const EnvLookup& env = system_env);

}  // namespace edgereg::cli
