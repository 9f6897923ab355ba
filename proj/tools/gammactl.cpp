#include <iostream>

#include "gammaring/cli.hpp"

int main(int argc, char** argv) {
    return gammaring::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
