#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tmk/boundaried.hpp"
#include "tmk/problem.hpp"

namespace tmk {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// One FVS state: the deleted boundary labels and a partition of the rest.
/// block_of[i] is the block of label i + 1, or -1 when that label is deleted.
struct FvsState {
    unsigned deleted = 0;
    std::vector<int> block_of;
};

/// FVS states in table order: deletion masks ascending, then set partitions
/// of the surviving labels in restricted-growth order.
std::vector<FvsState> fvs_states(int t);

/// Number of states a signature of `problem` on t labels carries.
std::size_t state_count(ProblemId problem, int t);

/// Problem-specific cost profile of a boundaried graph. values[i] is the
/// cost of state i, kInfinity when the state is infeasible.
///  - VC: state i is the set of labels (bit j = label j + 1) in the cover;
///    the value counts the whole cover, boundary included.
///  - FVS: state i is fvs_states(t)[i]; the value counts interior deletions
///    only.
struct Signature {
    ProblemId problem = ProblemId::VC;
    int t = 0;
    std::vector<int> values;

    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_vc(const BoundariedGraph& bg);
/// Throws CapabilityError for t > kFvsSignatureCap.
Signature signature_fvs(const BoundariedGraph& bg);
Signature signature(ProblemId problem, const BoundariedGraph& bg);

inline constexpr int kFvsSignatureCap = 4;

/// c with s1 = s2 + c on every finite entry and equal infinity patterns,
/// or nullopt. Replacing a graph of signature s1 by one of signature s2
/// lowers the parameter by c. Throws InputError on mismatched problem or t.
std::optional<int> equivalent(const Signature& s1, const Signature& s2);

/// Caps every VC entry at value(S') + |S' \ S| over supersets S'.
/// Throws CapabilityError for FVS.
Signature truncate_signature(const Signature& s);

struct NormalizedSignature {
    std::vector<int> key;  ///< minimum finite entry is 0
    int normalizer = 0;    ///< subtracted minimum; 0 for the all-infinite key
};

NormalizedSignature normalize(const Signature& s);

/// "0,1,inf" style text form of a key.
std::string key_to_string(const std::vector<int>& key);
std::vector<int> key_from_string(const std::string& text);

struct FiiClass {
    std::vector<int> key;
    BoundariedGraph representative;
    int normalizer = 0;  ///< normalizer of the representative's signature
    std::uint64_t members = 0;
};

struct FiiTable {
    ProblemId problem = ProblemId::VC;
    int t = 0;
    int n_max = 0;
    std::vector<FiiClass> classes;  ///< sorted by key
    /// Largest representative vertex count.
    int varpi = 0;
    /// Class count among members with fewer than n_max vertices.
    std::size_t classes_below_cap = 0;

    /// True when the last enumeration level found no new class.
    bool saturated() const { return classes_below_cap == classes.size(); }
    const FiiClass* find(const std::vector<int>& key) const;
};

/// Signature used for table keys: truncated for VC, raw for FVS.
Signature table_signature(ProblemId problem, const BoundariedGraph& bg);

/// Enumerates every boundary-touching t-boundaried graph up to n_max
/// vertices and buckets them by normalized table signature. Representatives
/// are the first member in (n, m, canonical code) order.
FiiTable build_table(const ProblemSpec& p, int t, int n_max, EnumerationCaps caps = {});

struct Lookup {
    const FiiClass* cls = nullptr;
    /// normalizer(bg) - normalizer(rep): opt(bg + Z) = opt(rep + Z) + offset.
    int offset = 0;
};

/// nullopt when bg's class has no member within the table's cap.
std::optional<Lookup> lookup_representative(const FiiTable& table, const BoundariedGraph& bg);

inline constexpr int kTableFormatVersion = 1;

void write_table(std::ostream& os, const FiiTable& table);
/// Throws ParseError on malformed input or a version mismatch.
FiiTable read_table(std::istream& is);

/// "fii-<problem>-t<t>-n<n_max>-v<version>.tbl"
std::string table_file_name(ProblemId problem, int t, int n_max);

struct CachedTable {
    FiiTable table;
    std::filesystem::path path;
    bool cache_hit = false;
};

/// Reads the table from `dir` when present, otherwise builds and stores it.
CachedTable load_or_build_table(const std::filesystem::path& dir, const ProblemSpec& p, int t, int n_max,
                                EnumerationCaps caps = {});

/// Reads a cached table; nullopt when the file is absent.
std::optional<FiiTable> load_table(const std::filesystem::path& dir, ProblemId problem, int t, int n_max);

}  // namespace tmk
