#include "tables.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace fixtures {

const tmk::TableSet& tables(tmk::ProblemId problem, int b_max, int n_max) {
    static std::mutex mu;
    static std::map<std::tuple<tmk::ProblemId, int, int>, tmk::TableSet> cache;
    const std::lock_guard lock(mu);
    auto [it, fresh] = cache.try_emplace({problem, b_max, n_max});
    if (fresh) {
        for (int b = 0; b <= b_max; ++b) {
            it->second.by_boundary.emplace(b, tmk::build_table(tmk::ProblemSpec::of(problem), b, n_max));
        }
    }
    return it->second;
}

}  // namespace fixtures
