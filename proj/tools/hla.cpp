#include <iostream>
#include <string>
#include <vector>

#include "homlie/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = homlie::cli::run_command(args);
    std::cout << result.output;
    return result.exit_code;
}
