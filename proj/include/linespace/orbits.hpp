#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linespace/group.hpp"

namespace linespace::groups {

/// Orbit labels for all unordered point pairs. `regular` means every pair
/// stabilizer is trivial, i.e. every orbit has full group size.
struct PairOrbitTable {
    int v = 0;
    int orbit_count = 0;
    std::vector<std::int32_t> labels;  // v*v, symmetric, diagonal -1
    std::vector<std::int64_t> orbit_sizes;
    bool regular = false;

    std::int32_t pair_label(int p, int q) const {
        return labels[static_cast<std::size_t>(p) * static_cast<std::size_t>(v) +
                      static_cast<std::size_t>(q)];
    }
};

PairOrbitTable pair_orbit_table(const GroupAction& g);

/// A uniform partition of the points into d classes of size c.
struct Partition {
    std::vector<std::vector<int>> classes;
    std::int64_t c = 0;
    std::int64_t d = 0;
};

/// All minimal nontrivial block systems of a transitive action, sorted by
/// class size. Empty exactly when the action is primitive.
std::vector<Partition> minimal_block_systems(const GroupAction& g);

struct FilterResult {
    bool pass = true;
    std::optional<Element> witness;  // offending element on failure
};

/// Fails iff some involution acts without fixed points.
FilterResult involution_fixed_point_filter(const GroupAction& g);

/// Fails iff some element of g conjugates every element of the normal
/// point-regular subgroup m to its inverse.
FilterResult inversion_filter(const GroupAction& g, const std::vector<Element>& m);

struct FaithfulResult {
    bool faithful = true;
    std::optional<Element> kernel_witness;
};

/// Whether <n_generators> acts faithfully on the given orbit.
FaithfulResult faithful_on_orbit(const GroupAction& g, const std::vector<Element>& n_generators,
                                 const std::vector<int>& orbit);

}  // namespace linespace::groups
