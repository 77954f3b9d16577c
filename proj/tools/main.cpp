#include "twophoton/run.hpp"

int main(int argc, char** argv) { return twophoton::cli::run_main(argc, argv); }
