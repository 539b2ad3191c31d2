// Command line driver. Kept as a library function so tests can invoke it
// in-process and check exit codes and report files.
//
// Exit codes: 0 definite positive answer, 1 definite negative answer,
// 2 unknown or absence result, 3 usage or input error.

#pragma once

namespace semifrac {

int run_cli(int argc, const char* const* argv);

}  // namespace semifrac
