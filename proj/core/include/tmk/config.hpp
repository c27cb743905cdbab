#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tmk/generators.hpp"
#include "tmk/problem.hpp"

namespace tmk {

/// Run settings. Loaded from a JSON object whose keys match the field
/// names; command-line flags override individual fields afterwards.
struct Config {
    ProblemId problem = ProblemId::FVS;
    int r = 6;        ///< order of the excluded clique used by audits
    int t = -1;       ///< treewidth bound of G - X; < 0 takes the problem's
    int b_max = 2;    ///< largest protrusion boundary replaced
    int n_max = 6;    ///< enumeration cap for tables
    std::vector<std::uint64_t> seeds{1};
    int exact_cap = 25;
    std::string cache_dir;   ///< empty: $TMK_CACHE_DIR, else ".tmk-cache"
    std::string report_dir = "reports";
    GeneratorSpec generator;

    int effective_t() const;
    std::filesystem::path effective_cache_dir() const;
    /// Throws InputError when a cap is not positive or b_max is negative.
    void validate() const;
};

Config config_from_json_text(const std::string& text);
Config load_config(const std::filesystem::path& path);
std::string config_to_json(const Config& c);

}  // namespace tmk
