#include "h2plan/cli/commands.hpp"

int main(int argc, char** argv) { return h2plan::cli::main(argc, argv); }
