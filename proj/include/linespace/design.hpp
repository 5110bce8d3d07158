#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linespace/arith.hpp"
#include "linespace/group.hpp"
#include "linespace/orbits.hpp"

namespace linespace::designs {

/// A point set 0..v-1 with a list of k-subsets (lines). Blocks are kept
/// sorted, pairwise distinct, and listed in lexicographic order.
struct Design {
    int v = 0;
    int k = 0;
    std::vector<std::vector<int>> blocks;

    struct Provenance {
        groups::GroupSpec group;
        std::vector<int> base_block;
    };
    std::optional<Provenance> provenance;
};

/// The orbit of a base block under g, as a Design with provenance.
Design design_from_base_block(const groups::GroupAction& g, const std::vector<int>& base_block);

struct PairCoverageFailure {
    int p = 0;
    int q = 0;
    std::int64_t count = 0;  // 0 = uncovered, >1 = multiply covered
};

struct LinearSpaceReport {
    bool valid = false;
    std::int64_t r = -1;  // lines through each point (-1 if not constant)
    std::int64_t b = 0;
    bool r_constant = false;
    std::vector<PairCoverageFailure> bad_pairs;
};

/// Checks the linear space axioms: every point pair on exactly one line,
/// with the per-point line count constant.
LinearSpaceReport verify_linear_space(const Design& design);

struct GroupActionReport {
    bool invariant = false;
    bool line_transitive = false;
    bool line_regular = false;
    std::vector<std::int64_t> orbit_lengths;  // block orbit sizes
};

GroupActionReport verify_group_action(const Design& design, const groups::GroupAction& g);

struct TypeReport {
    bool constant = false;
    arith::IntersectionType type;     // type of the first line (the common one if constant)
    std::int64_t x = -1;              // intra-class pairs per line
    std::int64_t y = -1;              // -1 when not integral
    bool dd_consistent = false;       // (x, y, c, d) satisfy the parameter equations
    std::optional<std::pair<int, int>> witnesses;  // two lines with different types
};

/// Intersection type of every line against a uniform partition; reports the
/// common type when constant and cross-checks the parameter equations.
TypeReport intersection_type_of(const Design& design, const groups::Partition& partition);

/// Desarguesian projective plane of order q as the orbit of a perfect
/// difference set under Z_{q^2+q+1} (Singer cycle). Supported q: 2, 3, 4,
/// 7, 9, 11.
Design singer_plane(int q);

}  // namespace linespace::designs
