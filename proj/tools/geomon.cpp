#include "geomon/cli.hpp"

int main(int argc, char** argv) { return geomon::cli_main(argc, argv); }
