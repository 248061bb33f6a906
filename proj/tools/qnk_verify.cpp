#include "qnk/cli.hpp"

int main(int argc, char** argv) { return qnk::cli_main(argc, argv); }
