#include "fishan/cli.hpp"

int main(int argc, char** argv) { return fishan::cli::run(argc, argv); }
