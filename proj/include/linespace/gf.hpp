#pragma once

#include <cstdint>
#include <vector>

namespace linespace::designs {

/// GF(p^n) as polynomials over GF(p) modulo a bundled primitive polynomial;
/// x (the class of the indeterminate) generates the multiplicative group.
/// Elements are coefficient vectors of length n, least degree first.
class GaloisField {
public:
    /// modulus: coefficients a0..a_{n-1} of a monic degree-n polynomial.
    /// Verifies primitivity on construction (order of x is exactly p^n - 1).
    GaloisField(std::int64_t p, std::vector<std::int64_t> modulus);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }

    using Elt = std::vector<std::int64_t>;
    Elt zero() const { return Elt(static_cast<std::size_t>(n_), 0); }
    Elt one() const;
    Elt x() const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, std::int64_t e) const;
    bool is_one(const Elt& a) const;

    /// Packs an element into an integer (base-p digits), for set membership.
    std::int64_t encode(const Elt& a) const;

private:
    void verify_primitive() const;

    std::int64_t p_ = 0;
    int n_ = 0;
    std::vector<std::int64_t> modulus_;  // length n, monic part implied
};

}  // namespace linespace::designs
