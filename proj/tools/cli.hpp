#pragma once

// Exit codes: 0 success, 1 probe ran but did not certify, 2 bad input.
int run_cli(int argc, char** argv);
