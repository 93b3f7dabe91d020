#include "spinon/cli.hpp"

int main(int argc, char** argv) { return spinon::cli::main_entry(argc, argv); }
