#include "caliber/cli.hpp"

int main(int argc, char** argv) { return caliber::run_cli(argc, argv); }
