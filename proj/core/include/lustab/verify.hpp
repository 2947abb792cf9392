#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lustab {

struct VerifyItem {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The full reproduction suite: stabilizer dimensions, generator
/// conformance, scramble-and-recover, the worked finite-stabilizer
/// examples, chord-diagram counts, and the brute-force cross-checks.
/// Deterministic for a fixed seed.
std::vector<VerifyItem> run_verification_suite(std::uint64_t seed);

/// Prints one pass/fail line per item; returns the number of failures.
int print_verification(std::ostream& out, const std::vector<VerifyItem>& items);

}  // namespace lustab
