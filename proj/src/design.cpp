#include "linespace/design.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace linespace::designs {

Design design_from_base_block(const groups::GroupAction& g, const std::vector<int>& base_block) {
    if (base_block.empty()) throw std::invalid_argument("design_from_base_block: empty block");
    for (int x : base_block)
        if (x < 0 || x >= g.degree())
            throw std::invalid_argument("design_from_base_block: point out of range");

    std::set<std::vector<int>> blocks;
    std::vector<int> image(base_block.size());
    for (groups::Element e = 0; e < g.order(); ++e) {
        for (std::size_t i = 0; i < base_block.size(); ++i) image[i] = g.apply(e, base_block[i]);
        std::sort(image.begin(), image.end());
        blocks.insert(image);
    }
    Design d;
    d.v = g.degree();
    d.k = static_cast<int>(base_block.size());
    d.blocks.assign(blocks.begin(), blocks.end());
    auto sorted_base = base_block;
    std::sort(sorted_base.begin(), sorted_base.end());
    d.provenance = Design::Provenance{g.spec(), std::move(sorted_base)};
    return d;
}

LinearSpaceReport verify_linear_space(const Design& design) {
    const int v = design.v;
    LinearSpaceReport report;
    report.b = static_cast<std::int64_t>(design.blocks.size());

    std::vector<std::int64_t> pair_count(static_cast<std::size_t>(v) * v, 0);
    std::vector<std::int64_t> point_count(static_cast<std::size_t>(v), 0);
    for (const auto& block : design.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            ++point_count[static_cast<std::size_t>(block[i])];
            for (std::size_t j = i + 1; j < block.size(); ++j)
                ++pair_count[static_cast<std::size_t>(block[i]) * v + block[j]];
        }
    }
    for (int p = 0; p < v; ++p)
        for (int q = p + 1; q < v; ++q) {
            const std::int64_t cnt = pair_count[static_cast<std::size_t>(p) * v + q];
            if (cnt != 1) report.bad_pairs.push_back({p, q, cnt});
        }
    report.r_constant =
        std::all_of(point_count.begin(), point_count.end(),
                    [&](std::int64_t c) { return c == point_count.front(); });
    if (report.r_constant && v > 0) report.r = point_count.front();
    report.valid = report.bad_pairs.empty() && report.r_constant;
    return report;
}

GroupActionReport verify_group_action(const Design& design, const groups::GroupAction& g) {
    if (g.degree() != design.v)
        throw std::invalid_argument("verify_group_action: degree mismatch");
    GroupActionReport report;

    std::map<std::vector<int>, int> block_index;
    for (std::size_t i = 0; i < design.blocks.size(); ++i)
        block_index.emplace(design.blocks[i], static_cast<int>(i));

    const auto gens = g.generators();
    auto image_of = [&](const std::vector<int>& block, groups::Element e) {
        std::vector<int> img(block.size());
        for (std::size_t i = 0; i < block.size(); ++i) img[i] = g.apply(e, block[i]);
        std::sort(img.begin(), img.end());
        return img;
    };

    report.invariant = true;
    for (const auto& block : design.blocks) {
        for (groups::Element e : gens) {
            if (!block_index.count(image_of(block, e))) {
                report.invariant = false;
                break;
            }
        }
        if (!report.invariant) break;
    }
    if (!report.invariant) return report;

    // block orbits under the generators
    std::vector<int> orbit_id(design.blocks.size(), -1);
    int norbits = 0;
    for (std::size_t i = 0; i < design.blocks.size(); ++i) {
        if (orbit_id[i] != -1) continue;
        const int id = norbits++;
        std::int64_t size = 0;
        std::vector<int> stack{static_cast<int>(i)};
        orbit_id[i] = id;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            ++size;
            for (groups::Element e : gens) {
                int nxt = block_index.at(image_of(design.blocks[static_cast<std::size_t>(cur)], e));
                if (orbit_id[static_cast<std::size_t>(nxt)] == -1) {
                    orbit_id[static_cast<std::size_t>(nxt)] = id;
                    stack.push_back(nxt);
                }
            }
        }
        report.orbit_lengths.push_back(size);
    }
    report.line_transitive = norbits == 1;
    report.line_regular =
        report.line_transitive && g.order() == static_cast<std::int64_t>(design.blocks.size());
    return report;
}

TypeReport intersection_type_of(const Design& design, const groups::Partition& partition) {
    if (partition.c < 2 || partition.d < 2)
        throw std::invalid_argument("intersection_type_of: partition must be nontrivial");
    if (partition.c * partition.d != design.v)
        throw std::invalid_argument("intersection_type_of: partition does not cover the points");
    std::vector<int> class_of(static_cast<std::size_t>(design.v), -1);
    for (std::size_t ci = 0; ci < partition.classes.size(); ++ci)
        for (int x : partition.classes[ci]) {
            if (x < 0 || x >= design.v || class_of[static_cast<std::size_t>(x)] != -1)
                throw std::invalid_argument("intersection_type_of: classes must partition the points");
            class_of[static_cast<std::size_t>(x)] = static_cast<int>(ci);
        }

    TypeReport report;
    const int k = design.k;
    std::vector<int> per_class(partition.classes.size(), 0);
    arith::IntersectionType first;
    for (std::size_t li = 0; li < design.blocks.size(); ++li) {
        std::fill(per_class.begin(), per_class.end(), 0);
        for (int x : design.blocks[li]) ++per_class[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])];
        arith::IntersectionType type;
        type.counts.assign(static_cast<std::size_t>(k), 0);
        for (int cnt : per_class)
            if (cnt > 0) ++type.counts[static_cast<std::size_t>(cnt - 1)];
        if (li == 0) {
            first = type;
        } else if (!(type == first) && !report.witnesses) {
            report.witnesses = std::make_pair(0, static_cast<int>(li));
        }
    }
    report.type = first;
    report.constant = !report.witnesses.has_value() && !design.blocks.empty();
    std::int64_t x = 0;
    for (std::size_t i = 0; i < first.counts.size(); ++i)
        x += arith::binomial(static_cast<std::int64_t>(i) + 1, 2) * first.counts[i];
    report.x = x;
    const std::int64_t pairs = arith::binomial(k, 2);
    if (x >= 1 && (pairs - x) % partition.c == 0) {
        const std::int64_t y = (pairs - x) / partition.c;
        if (y >= 1 && (pairs - y) % x == 0 && (pairs - y) / x == partition.d) {
            report.y = y;
            report.dd_consistent = true;
        }
    }
    return report;
}

}  // namespace linespace::designs
