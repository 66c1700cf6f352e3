#include "enumpw_cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto r = enumpw::cli::run(args);
    std::cout << r.output;
    std::cerr << r.error;
    return r.exit_code;
}
