#include "aztec/cli.hpp"

int main(int argc, char** argv) { return aztec::cli_run(argc, argv); }
