#include "paralift/cli.hpp"

int main(int argc, char** argv) { return paralift::cli::run_command(argc, argv); }
