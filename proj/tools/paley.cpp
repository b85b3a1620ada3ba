#include "paley/cli.hpp"

int main(int argc, char** argv) { return paley::cli::run(argc, argv); }
