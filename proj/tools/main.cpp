#include "spinchain/cli.hpp"

int main(int argc, char** argv) { return spinchain::cli::run(argc, argv); }
