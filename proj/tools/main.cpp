#include "cli.hpp"

int main(int argc, char** argv) { return golden::cli::run(argc, argv); }
