#include "agraded/cli.hpp"

int main(int argc, char** argv) { return agraded::cli::run_main(argc, argv); }
