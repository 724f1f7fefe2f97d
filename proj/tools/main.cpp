#include "xcoh/cli.hpp"

int main(int argc, char** argv) { return xcoh::run_cli(argc, argv); }
