#include "scnoise/cli.hpp"

int main(int argc, char** argv) { return scnoise::cli_main(argc, argv); }
