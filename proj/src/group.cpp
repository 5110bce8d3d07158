#include "linespace/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace linespace::groups {

namespace {

constexpr std::int64_t kExplicitOrderCap = 1'000'000;

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Affine actions: points are M encoded in mixed radix, cyclic components
// first (least significant), then the GF(p) vector coordinates.
// Element index = j * |M| + m.
// ---------------------------------------------------------------------------
class AffineAction final : public GroupAction {
public:
    explicit AffineAction(const GroupSpec& spec) : spec_(spec) {
        const AffineSpec& a = spec_.affine();
        validate_shape(a);
        for (std::int64_t m : a.cyclic_moduli) radices_.push_back(m);
        if (a.vector_part) {
            p_ = a.vector_part->p;
            for (int i = 0; i < a.vector_part->e; ++i) radices_.push_back(p_);
        }
        if (radices_.empty() || radices_.size() > 60)
            throw std::invalid_argument("affine group: between 1 and 60 components required");
        m_size_ = 1;
        for (std::int64_t r : radices_) {
            if (m_size_ > (INT32_MAX - 1) / r) throw std::invalid_argument("affine group: degree too large");
            m_size_ *= r;
        }
        v_ = static_cast<int>(m_size_);
        s_ = a.top_order;
        order_ = s_ * m_size_;
        build_phi_tables(a);
    }

    int degree() const override { return v_; }
    std::int64_t order() const override { return order_; }

    Element multiply(Element e1, Element e2) const override {
        const std::int64_t j1 = e1 / m_size_, m1 = e1 % m_size_;
        const std::int64_t j2 = e2 / m_size_, m2 = e2 % m_size_;
        return ((j1 + j2) % s_) * m_size_ + add(phi_[static_cast<std::size_t>(j2)][m1], m2);
    }

    Element inverse(Element e) const override {
        const std::int64_t j = e / m_size_, m = e % m_size_;
        const std::int64_t ji = (s_ - j) % s_;
        return ji * m_size_ + neg(phi_[static_cast<std::size_t>(ji)][m]);
    }

    int apply(Element e, int point) const override {
        const std::int64_t j = e / m_size_, m = e % m_size_;
        return static_cast<int>(add(phi_[static_cast<std::size_t>(j)][point], m));
    }

    std::vector<Element> generators() const override {
        std::vector<Element> gens;
        std::int64_t stride = 1;
        for (std::int64_t r : radices_) {
            gens.push_back(stride);  // basis translation (0, e_i)
            stride *= r;
        }
        if (s_ > 1) gens.push_back(m_size_);  // (1, 0)
        return gens;
    }

    const GroupSpec& spec() const override { return spec_; }

private:
    static void validate_shape(const AffineSpec& a) {
        if (a.top_order < 1) throw std::invalid_argument("affine group: top_order must be >= 1");
        if (a.multipliers.size() != a.cyclic_moduli.size())
            throw std::invalid_argument("affine group: one multiplier per cyclic modulus required");
        for (std::int64_t m : a.cyclic_moduli)
            if (m < 2) throw std::invalid_argument("affine group: cyclic moduli must be >= 2");
        for (std::size_t i = 0; i < a.cyclic_moduli.size(); ++i)
            if (std::gcd(((a.multipliers[i] % a.cyclic_moduli[i]) + a.cyclic_moduli[i]) % a.cyclic_moduli[i],
                         a.cyclic_moduli[i]) != 1)
                throw std::invalid_argument("affine group: multiplier is not a unit of its modulus");
        if (a.vector_part) {
            if (!is_prime(a.vector_part->p))
                throw std::invalid_argument("affine group: vector component p must be prime");
            if (a.vector_part->e < 1) throw std::invalid_argument("affine group: vector exponent must be >= 1");
            const std::size_t e = static_cast<std::size_t>(a.vector_part->e);
            if (a.matrix.size() != e)
                throw std::invalid_argument("affine group: matrix must be e x e");
            for (const auto& row : a.matrix)
                if (row.size() != e) throw std::invalid_argument("affine group: matrix must be e x e");
            if (!invertible_mod_p(a.matrix, a.vector_part->p))
                throw std::invalid_argument("affine group: matrix is singular over GF(p)");
        } else if (!a.matrix.empty()) {
            throw std::invalid_argument("affine group: matrix given without a vector component");
        }
    }

    static bool invertible_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
        const std::size_t n = m.size();
        for (auto& row : m)
            for (auto& x : row) x = ((x % p) + p) % p;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && m[pivot][col] == 0) ++pivot;
            if (pivot == n) return false;
            std::swap(m[col], m[pivot]);
            // scale pivot row to 1
            std::int64_t inv = 1, a = m[col][col] % p;
            for (std::int64_t t = 1; t < p; ++t)
                if ((a * t) % p == 1) { inv = t; break; }
            for (auto& x : m[col]) x = (x * inv) % p;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                std::int64_t f = m[r][col];
                for (std::size_t cc = 0; cc < n; ++cc)
                    m[r][cc] = ((m[r][cc] - f * m[col][cc]) % p + p) % p;
            }
        }
        return true;
    }

    void decode(std::int64_t x, std::int64_t* digits) const {
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            digits[i] = x % radices_[i];
            x /= radices_[i];
        }
    }

    std::int64_t add(std::int64_t x, std::int64_t y) const {
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(x) * m_size_ + y];
        return add_slow(x, y);
    }

    std::int64_t add_slow(std::int64_t x, std::int64_t y) const {
        std::int64_t out = 0, stride = 1;
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            const std::int64_t r = radices_[i];
            out += ((x % r) + (y % r)) % r * stride;
            x /= r;
            y /= r;
            stride *= r;
        }
        return out;
    }

    std::int64_t neg(std::int64_t x) const { return neg_table_[static_cast<std::size_t>(x)]; }

    // phi applied to one point, componentwise
    std::int64_t phi_once(const AffineSpec& a, std::int64_t x) const {
        std::int64_t digits[64];
        decode(x, digits);
        std::size_t idx = 0;
        for (; idx < a.cyclic_moduli.size(); ++idx) {
            const std::int64_t m = a.cyclic_moduli[idx];
            const std::int64_t u = ((a.multipliers[idx] % m) + m) % m;
            digits[idx] = (digits[idx] * u) % m;
        }
        if (a.vector_part) {
            const std::size_t e = static_cast<std::size_t>(a.vector_part->e);
            const std::int64_t p = a.vector_part->p;
            std::int64_t w[64];
            for (std::size_t i = 0; i < e; ++i) {
                std::int64_t acc = 0;
                for (std::size_t jj = 0; jj < e; ++jj)
                    acc += ((a.matrix[i][jj] % p) + p) % p * digits[idx + jj];
                w[i] = acc % p;
            }
            for (std::size_t i = 0; i < e; ++i) digits[idx + i] = w[i];
        }
        std::int64_t out = 0, stride = 1;
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            out += digits[i] * stride;
            stride *= radices_[i];
        }
        return out;
    }

    void build_phi_tables(const AffineSpec& a) {
        phi_.assign(static_cast<std::size_t>(s_), {});
        auto& id = phi_[0];
        id.resize(static_cast<std::size_t>(m_size_));
        std::iota(id.begin(), id.end(), 0);
        for (std::int64_t j = 1; j < s_; ++j) {
            auto& prev = phi_[static_cast<std::size_t>(j - 1)];
            auto& cur = phi_[static_cast<std::size_t>(j)];
            cur.resize(static_cast<std::size_t>(m_size_));
            for (std::int64_t x = 0; x < m_size_; ++x)
                cur[static_cast<std::size_t>(x)] = phi_once(a, prev[static_cast<std::size_t>(x)]);
        }
        // phi^s must be the identity, and no smaller power may be
        for (std::int64_t x = 0; x < m_size_; ++x) {
            std::int64_t last = phi_once(a, phi_[static_cast<std::size_t>(s_ - 1)][static_cast<std::size_t>(x)]);
            if (last != x) throw std::invalid_argument("affine group: phi^s is not the identity");
        }
        for (std::int64_t j = 1; j < s_; ++j) {
            bool is_id = true;
            for (std::int64_t x = 0; x < m_size_ && is_id; ++x)
                is_id = phi_[static_cast<std::size_t>(j)][x] == x;
            if (is_id)
                throw std::invalid_argument("affine group: top order is wrong (phi has smaller order)");
        }
        neg_table_.resize(static_cast<std::size_t>(m_size_));
        for (std::int64_t x = 0; x < m_size_; ++x)
            neg_table_[static_cast<std::size_t>(x)] = neg_slow(x);
        if (m_size_ <= 4096) {
            add_table_.resize(static_cast<std::size_t>(m_size_ * m_size_));
            for (std::int64_t x = 0; x < m_size_; ++x)
                for (std::int64_t y = 0; y < m_size_; ++y)
                    add_table_[static_cast<std::size_t>(x) * m_size_ + y] = add_slow(x, y);
        }
    }

    std::int64_t neg_slow(std::int64_t x) const {
        std::int64_t out = 0, stride = 1;
        for (std::size_t i = 0; i < radices_.size(); ++i) {
            const std::int64_t r = radices_[i];
            out += ((r - x % r) % r) * stride;
            x /= r;
            stride *= r;
        }
        return out;
    }

    GroupSpec spec_;
    std::vector<std::int64_t> radices_;
    std::int64_t p_ = 0;
    std::int64_t m_size_ = 1;
    std::int64_t s_ = 1;
    std::int64_t order_ = 1;
    int v_ = 0;
    std::vector<std::vector<std::int64_t>> phi_;  // phi_[j][x] = phi^j(x)
    std::vector<std::int64_t> neg_table_;
    std::vector<std::int64_t> add_table_;  // only for small degrees
};

// ---------------------------------------------------------------------------
// Explicit permutation groups, fully enumerated by closure.
// ---------------------------------------------------------------------------
struct PermHash {
    std::size_t operator()(const std::vector<int>& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class ExplicitAction final : public GroupAction {
public:
    explicit ExplicitAction(const GroupSpec& spec) : spec_(spec) {
        const ExplicitSpec& e = spec_.explicit_spec();
        if (e.degree < 1) throw std::invalid_argument("explicit group: degree must be >= 1");
        v_ = e.degree;
        for (const auto& g : e.generators) validate_perm(g, v_);

        std::vector<int> id(static_cast<std::size_t>(v_));
        std::iota(id.begin(), id.end(), 0);
        elements_.push_back(id);
        index_.emplace(id, 0);
        // breadth-first closure: deterministic element order
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            for (const auto& g : e.generators) {
                std::vector<int> prod(static_cast<std::size_t>(v_));
                for (int x = 0; x < v_; ++x)
                    prod[static_cast<std::size_t>(x)] =
                        g[static_cast<std::size_t>(elements_[i][static_cast<std::size_t>(x)])];
                if (index_.emplace(prod, static_cast<Element>(elements_.size())).second) {
                    elements_.push_back(std::move(prod));
                    if (static_cast<std::int64_t>(elements_.size()) > kExplicitOrderCap)
                        throw std::runtime_error("explicit group: order exceeds enumeration cap");
                }
            }
        }
        inverse_.resize(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            std::vector<int> inv(static_cast<std::size_t>(v_));
            for (int x = 0; x < v_; ++x)
                inv[static_cast<std::size_t>(elements_[i][static_cast<std::size_t>(x)])] = x;
            inverse_[i] = index_.at(inv);
        }
        gen_indices_.reserve(e.generators.size());
        for (const auto& g : e.generators) gen_indices_.push_back(index_.at(g));
    }

    int degree() const override { return v_; }
    std::int64_t order() const override { return static_cast<std::int64_t>(elements_.size()); }

    Element multiply(Element a, Element b) const override {
        const auto& pa = elements_[static_cast<std::size_t>(a)];
        const auto& pb = elements_[static_cast<std::size_t>(b)];
        std::vector<int> prod(static_cast<std::size_t>(v_));
        for (int x = 0; x < v_; ++x)
            prod[static_cast<std::size_t>(x)] = pb[static_cast<std::size_t>(pa[static_cast<std::size_t>(x)])];
        return index_.at(prod);
    }

    Element inverse(Element a) const override { return inverse_[static_cast<std::size_t>(a)]; }

    int apply(Element a, int point) const override {
        return elements_[static_cast<std::size_t>(a)][static_cast<std::size_t>(point)];
    }

    std::vector<Element> generators() const override { return gen_indices_; }
    const GroupSpec& spec() const override { return spec_; }

private:
    static void validate_perm(const std::vector<int>& g, int v) {
        if (static_cast<int>(g.size()) != v)
            throw std::invalid_argument("explicit group: generator length != degree");
        std::vector<char> seen(static_cast<std::size_t>(v), 0);
        for (int x : g) {
            if (x < 0 || x >= v || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("explicit group: generator is not a permutation");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }

    GroupSpec spec_;
    int v_ = 0;
    std::vector<std::vector<int>> elements_;
    std::unordered_map<std::vector<int>, Element, PermHash> index_;
    std::vector<Element> inverse_;
    std::vector<Element> gen_indices_;
};

}  // namespace

bool GroupAction::is_transitive() const {
    const int v = degree();
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    const auto gens = generators();
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (Element g : gens) {
            int y = apply(g, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == v;
}

std::int64_t GroupAction::stabilizer_order() const {
    // orbit-stabilizer for the point 0
    const int v = degree();
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::int64_t orbit = 1;
    const auto gens = generators();
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (Element g : gens) {
            int y = apply(g, x);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++orbit;
                stack.push_back(y);
            }
        }
    }
    return order() / orbit;
}

std::unique_ptr<GroupAction> build_group(const GroupSpec& spec) {
    if (spec.is_affine()) return std::make_unique<AffineAction>(spec);
    return std::make_unique<ExplicitAction>(spec);
}

std::vector<Element> subgroup_closure(const GroupAction& g, const std::vector<Element>& gens) {
    std::vector<Element> elems{g.identity()};
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (Element gen : gens) {
            Element prod = g.multiply(elems[i], gen);
            if (!seen[static_cast<std::size_t>(prod)]) {
                seen[static_cast<std::size_t>(prod)] = 1;
                elems.push_back(prod);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<Element> translation_subgroup(const GroupAction& g) {
    if (!g.spec().is_affine())
        throw std::invalid_argument("translation_subgroup: affine action required");
    std::vector<Element> out(static_cast<std::size_t>(g.degree()));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

std::vector<int> point_stabilizer_fixed_points(const GroupAction& g, int p) {
    const int v = g.degree();
    if (p < 0 || p >= v) throw std::invalid_argument("point_stabilizer_fixed_points: bad point");
    std::vector<char> fixed(static_cast<std::size_t>(v), 1);
    for (Element e = 0; e < g.order(); ++e) {
        if (g.apply(e, p) != p) continue;
        for (int x = 0; x < v; ++x)
            if (fixed[static_cast<std::size_t>(x)] && g.apply(e, x) != x)
                fixed[static_cast<std::size_t>(x)] = 0;
    }
    std::vector<int> out;
    for (int x = 0; x < v; ++x)
        if (fixed[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

}  // namespace linespace::groups
