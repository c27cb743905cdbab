#pragma once

// Hand-built inputs on which each audit checker must report a violation.

#include <functional>
#include <string>
#include <vector>

#include "tmk/audit.hpp"

namespace fixtures {

struct NegativeFixture {
    std::string check_id;
    std::string description;
    std::function<tmk::CheckRecord()> run;
};

std::vector<NegativeFixture> negative_fixtures();

/// Star of bags: node 0 = {0}, leaves {0, i} for i = 1..leaves.
tmk::ForestDecomposition bag_star(int leaves);

}  // namespace fixtures
