#include "alexinv/cli.hpp"

int main(int argc, char **argv) { return alexinv::cli::main(argc, argv); }
