#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddchi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // usage, domain, or verification failure
inline constexpr int kExitIo = 2;

// Environment variable naming a config file, used when --config is absent.
inline constexpr const char* kConfigEnv = "ODDCHI_CONFIG";

/// Runs one subcommand. `args` excludes the program name. Output files named
/// "-" (the default) go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddchi::cli
