#pragma once

#include <vector>

#include "linespace/design.hpp"

namespace linespace::designs {

/// Canonical certificate: two designs are isomorphic iff their certificates
/// compare equal. `relabeling` maps original points to canonical labels.
struct Certificate {
    int v = 0;
    std::vector<std::vector<int>> canonical_blocks;
    std::vector<int> relabeling;

    friend bool operator==(const Certificate& a, const Certificate& b) {
        return a.v == b.v && a.canonical_blocks == b.canonical_blocks;
    }
    friend bool operator<(const Certificate& a, const Certificate& b) {
        if (a.v != b.v) return a.v < b.v;
        return a.canonical_blocks < b.canonical_blocks;
    }
};

/// Lexicographically least relabeled block list over all labelings reachable
/// by iterated partition refinement plus individualization. Backtracking is
/// cut by orbits of automorphisms discovered from equal-certificate leaves.
Certificate canonical_form(const Design& design);

}  // namespace linespace::designs
