#include "lcsa/acceptance.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    lcsa::AcceptanceOptions opt;
    if (const char* t = std::getenv("LCSA_THREADS")) opt.threads = std::max(1, std::atoi(t));
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--quick") opt.slow = false;
        else opt.only.push_back(std::atoi(argv[i]));
    }
    int failed = 0;
    opt.on_result = [&](const lcsa::Report& r) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.check;
        if (!r.notes.empty()) std::cout << " (" << r.notes.back() << ")";
        std::cout << "\n";
        for (auto& [k, v] : lcsa::ordered_entries(r.dims)) std::cout << "    " << k << ": " << v << "\n";
        for (auto& w : r.witnesses) std::cout << "    " << w << "\n";
        for (std::size_t k = 0; k + 1 < r.notes.size(); ++k) std::cout << "    note: " << r.notes[k] << "\n";
        std::cout << std::flush;
        if (!r.pass) ++failed;
    };
    lcsa::run_acceptance(opt);
    return failed ? 1 : 0;
}
