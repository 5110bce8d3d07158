#include "linespace/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace linespace::arith {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        std::int64_t num = n - k + i;
        std::int64_t g = std::gcd(result, i);
        std::int64_t den = i / g;
        std::int64_t part = result / g;
        g = std::gcd(num, den);
        num /= g;
        den /= g;
        // den divides the accumulated product exactly now
        if (part > INT64_MAX / num) throw std::overflow_error("binomial overflow");
        result = part * num;
        result /= den;
    }
    return result;
}

std::string IntersectionType::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(i + 1);
        if (counts[i] > 1) {
            out += '^';
            out += std::to_string(counts[i]);
        }
    }
    return out;
}

std::vector<IntersectionType> intersection_types(int k, std::int64_t x, std::int64_t c,
                                                 std::int64_t d) {
    if (k < 2) throw std::invalid_argument("intersection_types: k must be >= 2");
    if (x < 1) throw std::invalid_argument("intersection_types: x must be >= 1");
    if (c < 2 || d < 2) throw std::invalid_argument("intersection_types: c, d must be >= 2");

    std::vector<IntersectionType> out;
    std::vector<int> vec(static_cast<std::size_t>(k), 0);

    // choose d_i for i = 1..k in order; lexicographic by construction
    auto rec = [&](auto&& self, int i, std::int64_t rem_points, std::int64_t rem_pairs,
                   std::int64_t used_classes) -> void {
        if (rem_points == 0) {
            if (rem_pairs == 0) out.push_back(IntersectionType{vec});
            return;
        }
        if (i > k) return;
        std::int64_t max_di = rem_points / i;
        if (i > c) max_di = 0;
        for (std::int64_t di = 0; di <= max_di; ++di) {
            std::int64_t pairs = binomial(i, 2) * di;
            if (pairs > rem_pairs || used_classes + di > d) break;
            vec[static_cast<std::size_t>(i - 1)] = static_cast<int>(di);
            self(self, i + 1, rem_points - i * di, rem_pairs - pairs, used_classes + di);
            vec[static_cast<std::size_t>(i - 1)] = 0;
        }
    };
    rec(rec, 1, k, x, 0);
    return out;
}

DesignCounts design_counts(std::int64_t v, std::int64_t k) {
    if (!(2 < k && k < v)) throw std::invalid_argument("design_counts: need 2 < k < v");
    if ((v - 1) % (k - 1) != 0)
        throw integrality_error("r", "design_counts: r = (v-1)/(k-1) is not integral");
    std::int64_t r = (v - 1) / (k - 1);
    if ((v * r) % k != 0)
        throw integrality_error("b", "design_counts: b = v*r/k is not integral");
    return DesignCounts{r, v * r / k};
}

std::vector<ParameterRow> dd_parameter_rows(int k, const ParameterOptions& opts) {
    if (k < 3) throw std::invalid_argument("dd_parameter_rows: k must be >= 3");
    if (opts.k_range_check && (k < 9 || k > 12))
        throw std::invalid_argument("dd_parameter_rows: k outside [9, 12]");

    const std::int64_t pairs = binomial(k, 2);
    std::vector<ParameterRow> rows;
    for (std::int64_t x = 1; x < pairs; ++x) {
        for (std::int64_t y = 1; y < pairs; ++y) {
            if ((pairs - x) % y != 0 || (pairs - y) % x != 0) continue;
            const std::int64_t c = (pairs - x) / y;
            const std::int64_t d = (pairs - y) / x;
            if (c < 2 || d < 2) continue;
            const std::int64_t v = c * d;
            if (v <= k) continue;
            if ((v - 1) % (k - 1) != 0) continue;
            const std::int64_t r = (v - 1) / (k - 1);
            if ((v * r) % k != 0) continue;
            const std::int64_t b = v * r / k;
            if (opts.require_gcd_one && std::gcd(static_cast<std::int64_t>(k), v) != 1) continue;
            auto types = intersection_types(k, x, c, d);
            if (types.empty()) continue;
            // b*x counts intra-class pairs two ways; a violation is a bug, not a filter
            if (b * x != d * (c * (c - 1) / 2))
                throw std::logic_error("dd_parameter_rows: identity b*x = d*C(c,2) violated");
            rows.push_back(ParameterRow{k, x, y, c, d, v, r, b, std::move(types)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const ParameterRow& a, const ParameterRow& b) {
        return std::tie(a.v, a.x, a.y) < std::tie(b.v, b.x, b.y);
    });
    return rows;
}

}  // namespace linespace::arith
