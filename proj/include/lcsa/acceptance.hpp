#pragma once

#include "lcsa/report.hpp"

#include <functional>
#include <vector>

namespace lcsa {

struct AcceptanceOptions {
    unsigned seed = 20241016;
    int threads = 1;
    bool slow = true;  // false skips the rank-1024 E(5,10) Verma module (the criterion then fails)
    std::vector<int> only;  // criteria to run; empty runs all
    std::function<void(const Report&)> on_result;
};

// one report per criterion 1..9, check = "criterion N: ..."
std::vector<Report> run_acceptance(const AcceptanceOptions& opt);

}  // namespace lcsa
