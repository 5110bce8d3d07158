#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "linespace/design.hpp"
#include "linespace/gf.hpp"

namespace linespace::designs {

namespace {

struct PlaneField {
    int q;
    std::int64_t p;
    std::vector<std::int64_t> modulus;  // primitive polynomial for GF(q^3), a0..a_{n-1}
};

// Lexicographically smallest primitive polynomial of the right degree,
// re-verified at construction time by GaloisField.
const PlaneField kPlaneFields[] = {
    {2, 2, {1, 1, 0}},            // x^3 + x + 1
    {3, 3, {1, 2, 0}},            // x^3 + 2x + 1
    {4, 2, {1, 1, 0, 0, 0, 0}},   // x^6 + x + 1
    {7, 7, {2, 3, 0}},            // x^3 + 3x + 2
    {9, 3, {2, 1, 0, 0, 0, 0}},   // x^6 + x + 2
    {11, 11, {4, 1, 0}},          // x^3 + x + 4
};

}  // namespace

Design singer_plane(int q) {
    const PlaneField* pf = nullptr;
    for (const auto& cand : kPlaneFields)
        if (cand.q == q) pf = &cand;
    if (!pf) throw std::invalid_argument("singer_plane: unsupported order");

    const GaloisField field(pf->p, pf->modulus);
    const int n_points = q * q + q + 1;
    std::int64_t field_order = 1;
    for (int i = 0; i < field.n(); ++i) field_order *= field.p();
    field_order -= 1;

    // GF(q)* is the order-(q-1) subgroup generated by alpha^n_points
    std::unordered_set<std::int64_t> subfield;
    subfield.insert(field.encode(field.zero()));
    const auto alpha = field.x();
    {
        auto gen = field.pow(alpha, n_points);
        auto cur = field.one();
        for (int j = 0; j < q - 1; ++j) {
            subfield.insert(field.encode(cur));
            cur = field.mul(cur, gen);
        }
    }
    // W = GF(q)-span of {1, alpha}; alpha^i in W marks the difference set
    std::unordered_set<std::int64_t> span;
    for (std::int64_t ea : subfield)
        for (std::int64_t eb : subfield) {
            // decode  a and b back from packed form
            GaloisField::Elt a = field.zero(), b = field.zero();
            std::int64_t ta = ea, tb = eb;
            for (int i = 0; i < field.n(); ++i) {
                a[static_cast<std::size_t>(i)] = ta % field.p();
                ta /= field.p();
                b[static_cast<std::size_t>(i)] = tb % field.p();
                tb /= field.p();
            }
            span.insert(field.encode(field.add(a, field.mul(b, alpha))));
        }

    std::vector<int> diff_set;
    {
        auto cur = field.one();
        for (int i = 0; i < n_points; ++i) {
            if (span.count(field.encode(cur))) diff_set.push_back(i);
            cur = field.mul(cur, alpha);
        }
    }
    if (static_cast<int>(diff_set.size()) != q + 1)
        throw std::logic_error("singer_plane: difference set has wrong size");

    groups::GroupSpec spec;
    groups::AffineSpec affine;
    affine.cyclic_moduli = {n_points};
    affine.multipliers = {1};
    affine.top_order = 1;
    spec.value = affine;
    const auto group = groups::build_group(spec);
    return design_from_base_block(*group, diff_set);
}

}  // namespace linespace::designs
