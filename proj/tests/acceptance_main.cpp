// Runs the full built-in verification suite and reports one [PASS]/[FAIL]
// line per criterion.  Exit code 0 iff every criterion passes.
#include <cstdio>
#include <exception>
#include <iostream>

#include "fractorus/acceptance.hpp"

int main(int argc, char** argv) {
    const std::string filter = argc > 1 ? argv[1] : "";
    try {
        const int failed = fractorus::acceptance::run_and_report(std::cout, filter);
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "acceptance suite aborted: " << ex.what() << "\n";
        return 2;
    }
}
