#pragma once

#include <string>
#include <string_view>

namespace tmk {

enum class ProblemId { FVS, VC };

/// A treewidth-bounding problem: every yes-instance (G, k) has a solution X
/// with |X| <= c * k and tw(G - X) <= t.
struct ProblemSpec {
    ProblemId id = ProblemId::FVS;
    int c = 1;
    int t = 1;

    static ProblemSpec fvs() { return {ProblemId::FVS, 1, 1}; }
    static ProblemSpec vc() { return {ProblemId::VC, 1, 0}; }
    static ProblemSpec of(ProblemId id) { return id == ProblemId::FVS ? fvs() : vc(); }

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

std::string to_string(ProblemId id);
/// Accepts "FVS"/"fvs" and "VC"/"vc"; throws InputError otherwise.
ProblemId parse_problem(std::string_view text);

}  // namespace tmk
