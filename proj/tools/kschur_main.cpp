#include "kschur/cli.hpp"

int main(int argc, char** argv) { return kschur::cli::run(argc, argv); }
