#pragma once

#include "endo/witness.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace endo {

class OracleCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleCaps {
    std::size_t max_reactions = 8;
    std::size_t max_species = 6;
};

struct OracleVerdict {
    Mode mode = Mode::Endotactic;
    bool holds = true;
    std::optional<WitnessCertificate> witness;  // set iff !holds
    /// False when the sweep ran on a sampled direction set (m > 3).
    bool authoritative = true;
    std::size_t checked = 0;  // partitions or directions examined
};

/// Partition index p encodes reaction i by digit (p / 3^i) % 3:
/// 0 = R0, 1 = R-, 2 = R+. Partitions with R- empty are skipped.
struct PartitionSets {
    std::vector<std::size_t> r_zero, r_minus, r_plus;
};
PartitionSets decode_partition(std::uint64_t index, std::size_t reactions);

/// Tries every partition in index order. For each one an exact LP maximises
/// a margin t in [0, 1] with the strict rows written as <= -t and |w_k| <= 1
/// (0 <= w_k <= 1 for LowerEndotactic); the partition is a witness iff the
/// optimum has t > 0. Returns the first witness. Throws OracleCapError past
/// the caps.
OracleVerdict brute_force_classify(const ReactionNetwork& net, Mode mode, const OracleCaps& caps = {});

struct DirectionSet {
    std::vector<RationalVector> directions;  // nonzero, primitive integer, closed under negation
    bool complete = false;
};

/// Hyperplane normals: nonzero reaction vectors, differences of distinct
/// sources and the coordinate vectors, each scaled by canonical_direction
/// and deduplicated.
std::vector<RationalVector> arrangement_normals(const ReactionNetwork& net);

/// For m <= 3, one vector in every nonzero face of the arrangement (rays,
/// two-dimensional faces, open cells), which covers every sign pattern.
/// Beyond that, intersection rays of (m-1)-subsets up to a budget plus
/// seeded random integer vectors; `complete` is false.
DirectionSet build_direction_set(const ReactionNetwork& net, std::size_t samples = 4000,
                                 std::uint64_t seed = 0x5eed);

/// Left sweep of project(net, w) for every direction (only w >= 0 for
/// LowerEndotactic). Order of the returned verdicts: StronglyEndotactic,
/// Endotactic, LowerEndotactic.
std::vector<OracleVerdict> sweep_classify(const ReactionNetwork& net);
std::vector<OracleVerdict> sweep_classify(const ReactionNetwork& net, const DirectionSet& directions);

}  // namespace endo
