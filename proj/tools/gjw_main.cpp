#include <iostream>
#include <vector>

#include "gj/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        gj::cli::RunResult r = gj::cli::run(args);
        if (!r.out.empty()) std::cout << r.out;
        if (!r.err.empty()) std::cerr << r.err;
        return r.code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
