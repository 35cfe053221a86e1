#include "topo/verify.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv)
{
    topo::FixtureProvider fixtures;
    if (argc > 2 && std::string(argv[1]) == "--fixtures") fixtures.dir = argv[2];

    bool all_ok = true;
    for (const topo::CheckResult &r : topo::run_all_checks(fixtures)) {
        if (r.passed) {
            std::cout << "[PASS] " << r.name << "\n";
        } else {
            std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
            all_ok = false;
        }
    }
    return all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
