#include <iostream>

#include "fluxtri/cli/config.hpp"

int main(int argc, char** argv) { return fluxtri::cli::run(argc, argv, std::cout, std::cerr); }
