#include "shellrange/cli.hpp"

int main(int argc, char** argv) { return shellrange::cli_main(argc, argv); }
