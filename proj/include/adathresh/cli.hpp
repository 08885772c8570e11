#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adathresh::cli
{

/// Process exit statuses.
enum ExitCode : int
{
	Ok = 0,
	Usage = 1,      // unknown flag, missing argument, malformed number
	Io = 2,         // unreadable input, malformed PGM, unwritable output
	Validation = 3, // parameter outside its documented range
};

/// Entry point behind the adathresh executable. `args` excludes the
/// program name. Diagnostics go to `err` as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace adathresh::cli
