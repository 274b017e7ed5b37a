#include "loophom/cli/cli.hpp"

int main(int argc, char** argv) { return loophom::cli::run(argc, argv); }
