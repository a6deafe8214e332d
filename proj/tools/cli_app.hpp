#pragma once

namespace poolstat {

// Entry point of the poolstat command-line tool; returns the process exit
// code (0 ok, 2 usage error, 3 data error, 4 numeric failure).
int run_cli(int argc, const char* const* argv);

}  // namespace poolstat
