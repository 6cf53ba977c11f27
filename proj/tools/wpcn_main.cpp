#include "wpcn/cli.hpp"

int main(int argc, char** argv) { return wpcn::cli_main(argc, argv); }
