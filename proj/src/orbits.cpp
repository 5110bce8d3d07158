#include "linespace/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace linespace::groups {

PairOrbitTable pair_orbit_table(const GroupAction& g) {
    const int v = g.degree();
    if (v < 2) throw std::invalid_argument("pair_orbit_table: need at least 2 points");
    PairOrbitTable table;
    table.v = v;
    table.labels.assign(static_cast<std::size_t>(v) * v, -1);
    const auto gens = g.generators();
    auto lab = [&](int p, int q) -> std::int32_t& {
        return table.labels[static_cast<std::size_t>(p) * v + q];
    };

    std::vector<std::pair<int, int>> stack;
    for (int p = 0; p < v; ++p) {
        for (int q = p + 1; q < v; ++q) {
            if (lab(p, q) != -1) continue;
            const std::int32_t id = table.orbit_count++;
            std::int64_t size = 1;
            lab(p, q) = lab(q, p) = id;
            stack.push_back({p, q});
            while (!stack.empty()) {
                auto [a, b] = stack.back();
                stack.pop_back();
                for (Element e : gens) {
                    int na = g.apply(e, a), nb = g.apply(e, b);
                    if (na > nb) std::swap(na, nb);
                    if (lab(na, nb) == -1) {
                        lab(na, nb) = lab(nb, na) = id;
                        ++size;
                        stack.push_back({na, nb});
                    }
                }
            }
            table.orbit_sizes.push_back(size);
        }
    }
    const std::int64_t order = g.order();
    table.regular = std::all_of(table.orbit_sizes.begin(), table.orbit_sizes.end(),
                                [order](std::int64_t s) { return s == order; });
    return table;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

// Finest G-congruence identifying 0 with beta (Atkinson's algorithm).
std::vector<int> finest_congruence(const GroupAction& g, int beta) {
    const int v = g.degree();
    const auto gens = g.generators();
    UnionFind uf(v);
    std::vector<std::pair<int, int>> queue{{0, beta}};
    while (!queue.empty()) {
        auto [a, b] = queue.back();
        queue.pop_back();
        if (!uf.unite(a, b)) continue;
        for (Element e : gens)
            queue.push_back({g.apply(e, a), g.apply(e, b)});
    }
    std::vector<int> cls(static_cast<std::size_t>(v));
    for (int x = 0; x < v; ++x) cls[static_cast<std::size_t>(x)] = uf.find(x);
    return cls;
}

Partition partition_from_classes(const std::vector<int>& cls) {
    std::map<int, std::vector<int>> by_rep;
    for (int x = 0; x < static_cast<int>(cls.size()); ++x)
        by_rep[cls[static_cast<std::size_t>(x)]].push_back(x);
    Partition part;
    for (auto& [rep, members] : by_rep) part.classes.push_back(std::move(members));
    part.d = static_cast<std::int64_t>(part.classes.size());
    part.c = static_cast<std::int64_t>(part.classes.front().size());
    return part;
}

}  // namespace

std::vector<Partition> minimal_block_systems(const GroupAction& g) {
    if (!g.is_transitive())
        throw std::invalid_argument("minimal_block_systems: action must be transitive");
    const int v = g.degree();

    // all minimal systems arise as the finest congruence through some {0, beta}
    std::vector<std::vector<int>> congruences(static_cast<std::size_t>(v));
    for (int beta = 1; beta < v; ++beta)
        congruences[static_cast<std::size_t>(beta)] = finest_congruence(g, beta);

    std::vector<std::vector<int>> distinct;
    for (int beta = 1; beta < v; ++beta) {
        const auto& cls = congruences[static_cast<std::size_t>(beta)];
        int nclasses = 0;
        for (int x = 0; x < v; ++x)
            if (cls[static_cast<std::size_t>(x)] == x) ++nclasses;
        if (nclasses == 1 || nclasses == v) continue;  // trivial
        // minimal iff every gamma in the class of 0 regenerates the same system
        bool minimal = true;
        for (int gamma = 1; gamma < v && minimal; ++gamma) {
            if (cls[static_cast<std::size_t>(gamma)] != cls[0]) continue;
            minimal = congruences[static_cast<std::size_t>(gamma)] == cls;
        }
        if (minimal && std::find(distinct.begin(), distinct.end(), cls) == distinct.end())
            distinct.push_back(cls);
    }

    std::vector<Partition> out;
    out.reserve(distinct.size());
    for (const auto& cls : distinct) out.push_back(partition_from_classes(cls));
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.c < b.c; });
    return out;
}

FilterResult involution_fixed_point_filter(const GroupAction& g) {
    const int v = g.degree();
    for (Element e = 1; e < g.order(); ++e) {
        if (g.multiply(e, e) != g.identity()) continue;
        bool has_fixed = false;
        for (int x = 0; x < v && !has_fixed; ++x) has_fixed = g.apply(e, x) == x;
        if (!has_fixed) return FilterResult{false, e};
    }
    return FilterResult{};
}

namespace {

void require_normal_and_regular(const GroupAction& g, const std::vector<Element>& m,
                                const char* who) {
    const int v = g.degree();
    if (static_cast<std::int64_t>(m.size()) != v)
        throw std::invalid_argument(std::string(who) + ": subgroup is not point-regular");
    std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> hit(static_cast<std::size_t>(v), 0);
    for (Element e : m) member[static_cast<std::size_t>(e)] = 1;
    if (!member[0]) throw std::invalid_argument(std::string(who) + ": subgroup must contain identity");
    for (Element e : m) {
        int img = g.apply(e, 0);
        if (hit[static_cast<std::size_t>(img)])
            throw std::invalid_argument(std::string(who) + ": subgroup is not point-regular");
        hit[static_cast<std::size_t>(img)] = 1;
    }
    for (Element gen : g.generators()) {
        const Element gi = g.inverse(gen);
        for (Element e : m) {
            const Element conj = g.multiply(g.multiply(gi, e), gen);
            if (!member[static_cast<std::size_t>(conj)])
                throw std::invalid_argument(std::string(who) + ": subgroup is not normal");
        }
    }
}

}  // namespace

FilterResult inversion_filter(const GroupAction& g, const std::vector<Element>& m) {
    require_normal_and_regular(g, m, "inversion_filter");
    for (Element h = 0; h < g.order(); ++h) {
        const Element hi = g.inverse(h);
        bool inverts_all = true;
        for (Element e : m) {
            if (g.multiply(g.multiply(hi, e), h) != g.inverse(e)) {
                inverts_all = false;
                break;
            }
        }
        if (inverts_all) return FilterResult{false, h};
    }
    return FilterResult{};
}

FaithfulResult faithful_on_orbit(const GroupAction& g, const std::vector<Element>& n_generators,
                                 const std::vector<int>& orbit) {
    const auto elems = subgroup_closure(g, n_generators);
    std::vector<char> in_orbit(static_cast<std::size_t>(g.degree()), 0);
    for (int x : orbit) in_orbit[static_cast<std::size_t>(x)] = 1;
    for (Element e : elems)
        for (int x : orbit)
            if (!in_orbit[static_cast<std::size_t>(g.apply(e, x))])
                throw std::invalid_argument("faithful_on_orbit: set is not invariant under <n>");
    // the orbit must be a single <n>-orbit
    if (orbit.empty()) throw std::invalid_argument("faithful_on_orbit: empty orbit");
    {
        std::vector<char> reached(static_cast<std::size_t>(g.degree()), 0);
        std::size_t count = 0;
        std::vector<int> stack{orbit.front()};
        reached[static_cast<std::size_t>(orbit.front())] = 1;
        ++count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (Element e : n_generators) {
                int y = g.apply(e, x);
                if (!reached[static_cast<std::size_t>(y)]) {
                    reached[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        if (count != orbit.size())
            throw std::invalid_argument("faithful_on_orbit: set is not a single <n>-orbit");
    }
    for (Element e : elems) {
        if (e == g.identity()) continue;
        bool trivial = true;
        for (int x : orbit)
            if (g.apply(e, x) != x) {
                trivial = false;
                break;
            }
        if (trivial) return FaithfulResult{false, e};
    }
    return FaithfulResult{};
}

}  // namespace linespace::groups
