#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace hloc::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

// Runs one subcommand; args excludes the program name.
int run(std::span<std::string const> args, std::ostream& out, std::ostream& err);

}  // namespace hloc::cli
