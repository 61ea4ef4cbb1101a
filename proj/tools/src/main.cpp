#include "indturan_cli/cli.hpp"

int main(int argc, char** argv) { return indturan::cli::dispatch(argc, argv); }
