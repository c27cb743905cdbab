#pragma once

#include "tmk/kernelizer.hpp"

namespace fixtures {

/// Tables for boundaries 0..b_max, built once per process.
const tmk::TableSet& tables(tmk::ProblemId problem, int b_max = 2, int n_max = 6);

}  // namespace fixtures
