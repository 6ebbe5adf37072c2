#include <iostream>
#include <string>
#include <vector>

#include "stepsha/cli.hpp"

int main(int argc, char** argv) {
    return stepsha::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
