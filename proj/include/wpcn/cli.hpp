#ifndef WPCN_CLI_HPP
#define WPCN_CLI_HPP

// Command-line entry point, exposed as a library function so tests can
// drive it in-process. Exit codes: 0 success, 1 configuration/usage error,
// 2 non-convergence under --strict.

namespace wpcn {

int cli_main(int argc, const char* const* argv);

} // namespace wpcn

#endif
