#include "commands.hpp"

int main(int argc, char** argv) { return rl2lz::cli::run(argc, argv); }
