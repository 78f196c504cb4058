#pragma once

#include <string>
#include <vector>

namespace aztec {

/// Exit statuses of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitArgument = 1, kExitVerification = 2, kExitResource = 3 };

/// Runs one subcommand: wave, embed, fold, verify, continuum, converge or
/// render. args[0] is the program name.
int cli_run(const std::vector<std::string>& args);
int cli_run(int argc, char** argv);

/// "4G", "512M", "64K" or a plain byte count.
std::size_t parse_byte_size(const std::string& text);

}  // namespace aztec
