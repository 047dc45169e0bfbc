#include <cstdlib>
#include <iostream>
#include <string>

#include "holo/acceptance.hpp"

// Usage: acceptance [criterion ...]
int main(int argc, char** argv) {
    holo::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i) opts.criteria.push_back(std::stoi(argv[i]));
    bool all = true;
    for (const auto& r : holo::run_acceptance(opts)) {
        std::cout << holo::format_line(r) << std::endl;
        if (!r.passed) {
            all = false;
            std::cerr << r.details.dump(2) << "\n";
        }
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
