#include "fracrsv/cli.hpp"

int main(int argc, char** argv) { return fracrsv::cli_main(argc, argv); }
