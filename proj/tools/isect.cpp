#include "isect/cli.hpp"

int main(int argc, char** argv) { return isect::run_cli(argc, argv); }
