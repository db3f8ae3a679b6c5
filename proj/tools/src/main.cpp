#include "tropfw/commands.hpp"

int main(int argc, char** argv) { return tropfw::run_cli(argc, argv); }
