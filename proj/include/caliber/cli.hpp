#pragma once

namespace caliber {

// Entry point of the caliber tool. Exit codes: 0 success, 1 failed check or
// unsuccessful outcome, 2 usage or parse error.
int run_cli(int argc, char** argv);

}  // namespace caliber
