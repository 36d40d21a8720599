#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "test_support.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

namespace {
std::uint64_t g_seed = 0x5eed'2024ULL;
}

namespace polyarea::test {
std::uint64_t seed() { return g_seed; }
}  // namespace polyarea::test

// Accepts --seed N / --seed=N for the randomized property suites; everything
// else is handed to doctest.
int main(int argc, char** argv) {
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            g_seed = std::stoull(argv[++i]);
        } else if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            g_seed = std::stoull(argv[i] + 7);
        } else {
            rest.push_back(argv[i]);
        }
    }
    std::cout << "property seed: " << g_seed << "\n";
    doctest::Context context(static_cast<int>(rest.size()), rest.data());
    return context.run();
}
