#include <cstdlib>
#include <iostream>
#include <string>

#include "lustab/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    const auto items = lustab::run_verification_suite(seed);
    return lustab::print_verification(std::cout, items) == 0 ? 0 : 1;
}
