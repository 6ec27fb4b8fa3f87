#include <iostream>
#include <string>
#include <vector>

#include "mdh/cli.hpp"

int main(int argc, char** argv) {
    return mdh::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
