#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tmk/kernelizer.hpp"

namespace tmk {

/// Uniform integer in [0, bound) by rejection sampling; identical streams on
/// every platform, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

enum class Family { PlantedModulator, BoundedDegreeRandom, PendantRich };

std::string to_string(Family f);
Family parse_family(const std::string& name);

struct GeneratorSpec {
    Family family = Family::PlantedModulator;
    ProblemId problem = ProblemId::FVS;
    int n = 20;
    int k = 3;
    int d = 4;       ///< maximum degree
    int attach = 3;  ///< planted: forest neighbours per modulator vertex (at least 2 when possible)
    std::uint64_t seed = 1;
};

struct Generated {
    Instance instance;
    VertexSet planted;  ///< planted modulator; empty for unplanted families
};

/// Deterministic per spec. Planted instances are a forest (FVS) or an
/// independent set (VC) on n - k vertices plus k modulator vertices, with
/// ids shuffled. Throws InputError for infeasible specs.
Generated generate(const GeneratorSpec& spec);

}  // namespace tmk
