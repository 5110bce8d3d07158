#include "linespace/gf.hpp"

#include <stdexcept>

namespace linespace::designs {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

GaloisField::GaloisField(std::int64_t p, std::vector<std::int64_t> modulus)
    : p_(p), n_(static_cast<int>(modulus.size())), modulus_(std::move(modulus)) {
    if (p_ < 2 || n_ < 1) throw std::invalid_argument("GaloisField: bad parameters");
    for (auto& c : modulus_) c = ((c % p_) + p_) % p_;
    verify_primitive();
}

GaloisField::Elt GaloisField::one() const {
    Elt e = zero();
    e[0] = 1;
    return e;
}

GaloisField::Elt GaloisField::x() const {
    Elt e = zero();
    if (n_ == 1) {
        e[0] = modulus_[0] ? (p_ - modulus_[0]) % p_ : 0;  // x = -a0 in GF(p)
    } else {
        e[1] = 1;
    }
    return e;
}

GaloisField::Elt GaloisField::add(const Elt& a, const Elt& b) const {
    Elt out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
        out[static_cast<std::size_t>(i)] =
            (a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]) % p_;
    return out;
}

GaloisField::Elt GaloisField::mul(const Elt& a, const Elt& b) const {
    std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * n_ - 1), 0);
    for (int i = 0; i < n_; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) %
                p_;
    }
    // reduce modulo the monic modulus
    for (int i = 2 * n_ - 2; i >= n_; --i) {
        const std::int64_t c = prod[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < n_; ++j)
            prod[static_cast<std::size_t>(i - n_ + j)] =
                ((prod[static_cast<std::size_t>(i - n_ + j)] - c * modulus_[static_cast<std::size_t>(j)]) % p_ +
                 p_) %
                p_;
    }
    prod.resize(static_cast<std::size_t>(n_));
    return prod;
}

GaloisField::Elt GaloisField::pow(const Elt& a, std::int64_t e) const {
    Elt result = one();
    Elt base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool GaloisField::is_one(const Elt& a) const {
    if (a[0] != 1) return false;
    for (int i = 1; i < n_; ++i)
        if (a[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

std::int64_t GaloisField::encode(const Elt& a) const {
    std::int64_t out = 0;
    for (int i = n_ - 1; i >= 0; --i) out = out * p_ + a[static_cast<std::size_t>(i)];
    return out;
}

void GaloisField::verify_primitive() const {
    std::int64_t order = 1;
    for (int i = 0; i < n_; ++i) {
        if (order > (1ll << 40)) throw std::invalid_argument("GaloisField: field too large");
        order *= p_;
    }
    order -= 1;
    const Elt gen = x();
    if (!is_one(pow(gen, order)))
        throw std::invalid_argument("GaloisField: modulus is not primitive (x^(q-1) != 1)");
    for (std::int64_t q : prime_factors(order))
        if (is_one(pow(gen, order / q)))
            throw std::invalid_argument("GaloisField: modulus is not primitive (x has small order)");
}

}  // namespace linespace::designs
