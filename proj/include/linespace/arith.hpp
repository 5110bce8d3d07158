#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linespace::arith {

/// Exact binomial coefficient C(n, k); throws std::overflow_error if the
/// result does not fit in a signed 64-bit integer.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// How a line meets the classes of a point partition: counts[i-1] is the
/// number of classes met in exactly i points (the multiset 1^{d1} ... k^{dk}).
struct IntersectionType {
    std::vector<int> counts;

    bool operator==(const IntersectionType&) const = default;
    auto operator<=>(const IntersectionType&) const = default;

    /// Renders as "1^2,2^4" (exponent omitted when 1, zero entries skipped).
    std::string to_text() const;
};

/// One feasible Delandtsheer-Doyen parameter tuple together with every
/// admissible intersection type.
struct ParameterRow {
    std::int64_t k = 0;  // line size
    std::int64_t x = 0;  // intra-class point pairs per line
    std::int64_t y = 0;  // dual parameter
    std::int64_t c = 0;  // class size
    std::int64_t d = 0;  // number of classes
    std::int64_t v = 0;  // points, = c*d
    std::int64_t r = 0;  // lines per point
    std::int64_t b = 0;  // lines
    std::vector<IntersectionType> types;

    bool operator==(const ParameterRow&) const = default;
};

struct ParameterOptions {
    bool require_gcd_one = false;  // keep only rows with gcd(k, v) = 1
    bool k_range_check = false;    // reject k outside [9, 12]
};

/// All feasible parameter rows for line size k, sorted by (v, x, y).
/// Every returned row carries its full admissible type list (nonempty).
std::vector<ParameterRow> dd_parameter_rows(int k, const ParameterOptions& opts = {});

/// All count vectors (d1..dk) with sum i*di = k, sum C(i,2)*di = x,
/// sum di <= d and di = 0 for i > c, in lexicographic order.
std::vector<IntersectionType> intersection_types(int k, std::int64_t x, std::int64_t c,
                                                 std::int64_t d);

struct DesignCounts {
    std::int64_t r = 0;
    std::int64_t b = 0;
};

/// Thrown when a replication or block count fails to be integral; `which`
/// names the offending count ("r" or "b").
class integrality_error : public std::domain_error {
public:
    integrality_error(std::string which, std::string message)
        : std::domain_error(std::move(message)), which_(std::move(which)) {}
    const std::string& which() const { return which_; }

private:
    std::string which_;
};

/// r = (v-1)/(k-1), b = v(v-1)/(k(k-1)) for a 2-(v,k,1) design.
DesignCounts design_counts(std::int64_t v, std::int64_t k);

}  // namespace linespace::arith
