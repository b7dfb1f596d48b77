#include <vector>

#include "fracolloc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fracolloc::run_cli(args);
}
