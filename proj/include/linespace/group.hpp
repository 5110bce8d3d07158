#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace linespace::groups {

/// Elements are dense indices in [0, order); index 0 is the identity.
using Element = std::int64_t;

/// Elementary abelian factor (Z_p)^e of the translation group.
struct VectorComponent {
    std::int64_t p = 0;
    int e = 0;
};

/// M : <phi> with M abelian (product of cyclic factors and an optional
/// GF(p)-vector factor) acting on itself by translation, and the top
/// generator phi acting componentwise: a unit multiplier per cyclic factor,
/// an invertible matrix over GF(p) on the vector factor.
struct AffineSpec {
    std::vector<std::int64_t> cyclic_moduli;
    std::optional<VectorComponent> vector_part;
    std::int64_t top_order = 1;
    std::vector<std::int64_t> multipliers;           // one per cyclic modulus
    std::vector<std::vector<std::int64_t>> matrix;   // e x e over GF(p)
};

/// Permutation group given by explicit generators on 0..degree-1.
/// The full element list is enumerated by closure (order capped at 1e6).
struct ExplicitSpec {
    int degree = 0;
    std::vector<std::vector<int>> generators;
};

struct GroupSpec {
    std::variant<AffineSpec, ExplicitSpec> value;

    bool is_affine() const { return std::holds_alternative<AffineSpec>(value); }
    const AffineSpec& affine() const { return std::get<AffineSpec>(value); }
    const ExplicitSpec& explicit_spec() const { return std::get<ExplicitSpec>(value); }
};

/// A finite group together with its action on points 0..degree()-1.
///
/// Composition convention: elements act on the right, so
///   apply(multiply(a, b), x) == apply(b, apply(a, x)).
/// For affine specs the element (j, m) sends x to phi^j(x) + m and
///   (j1,m1)*(j2,m2) = (j1+j2 mod s, phi^{j2}(m1) + m2).
class GroupAction {
public:
    virtual ~GroupAction() = default;

    virtual int degree() const = 0;
    virtual std::int64_t order() const = 0;
    Element identity() const { return 0; }
    virtual Element multiply(Element a, Element b) const = 0;
    virtual Element inverse(Element a) const = 0;
    virtual int apply(Element a, int point) const = 0;
    virtual std::vector<Element> generators() const = 0;
    virtual const GroupSpec& spec() const = 0;

    bool is_transitive() const;
    std::int64_t stabilizer_order() const;  // order / |orbit of 0|
};

/// Realizes a spec as a concrete action. Throws std::invalid_argument on a
/// non-unit multiplier, singular matrix, phi^s != id or ord(phi) != s, and
/// malformed permutations; std::runtime_error when an explicit closure
/// exceeds the element cap.
std::unique_ptr<GroupAction> build_group(const GroupSpec& spec);

/// Closure of a generating set inside g (breadth-first, deterministic).
std::vector<Element> subgroup_closure(const GroupAction& g, const std::vector<Element>& gens);

/// For an affine action: the point-regular translation subgroup {(0, m)}.
std::vector<Element> translation_subgroup(const GroupAction& g);

/// Common fixed points of the stabilizer of p.
std::vector<int> point_stabilizer_fixed_points(const GroupAction& g, int p);

}  // namespace linespace::groups
