#include <cstring>
#include <iostream>

#include "sumfree/acceptance.hpp"

int main(int argc, char** argv) {
    std::string suite = "fast";
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--suite") && i + 1 < argc) suite = argv[++i];
    }
    int failures = sumfree::run_acceptance(suite, std::cout);
    return failures == 0 ? 0 : 1;
}
