#pragma once

#include "k3lat/report.hpp"

#include <set>
#include <string>

namespace k3lat {

struct VerifyOptions {
    unsigned precision_bits = 200;
    unsigned seed = 20240601;
    double tol = 1e-6;                // tube integral tolerance
    std::set<std::string> faults;     // e8-gram, kummer-glue, lehmer
};

std::vector<std::string> known_faults();

// One check per acceptance criterion, in order.
RunReport verify_paper(const VerifyOptions& opt = {});

}  // namespace k3lat
