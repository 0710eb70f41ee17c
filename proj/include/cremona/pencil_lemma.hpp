#pragma once

// Numerical types of pencils of rational plane curves, and their free
// intersection with sextics having only ordinary double points.

#include "cremona/linsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

class PencilLemmaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree n and base multiplicities, sorted in decreasing order. Base points
/// may be infinitely near; only the numbers matter here.
struct PencilType {
    int n = 1;
    std::vector<int> mults;

    friend auto operator<=>(const PencilType&, const PencilType&) = default;

    [[nodiscard]] LinSysData as_system(const std::string& prefix = "b") const { return LinSysData::make(n, mults, prefix); }
    [[nodiscard]] std::string pretty() const { return as_system().pretty(); }
};

struct PencilCheck {
    long genus_residual = 0;     // (n-1)(n-2)/2 - sum m(m-1)/2, must be 0
    long dimension_residual = 0; // (n+1)(n+2)/2 - sum m(m+1)/2 - 2, must be 0
    long linear_value = 0;       // 3n - sum m, equals 2 for a rational pencil
    bool valid = false;
};

inline PencilCheck check_rational_pencil(int n, const std::vector<int>& mults) {
    if (n < 1) throw PencilLemmaError("pencil degree must be >= 1");
    for (int m : mults)
        if (m < 1) throw PencilLemmaError("base multiplicities must be >= 1");
    PencilCheck c;
    long g = static_cast<long>(n - 1) * (n - 2) / 2;
    long v = static_cast<long>(n + 1) * (n + 2) / 2;
    long s = 0;
    for (int m : mults) {
        g -= static_cast<long>(m) * (m - 1) / 2;
        v -= static_cast<long>(m) * (m + 1) / 2;
        s += m;
    }
    c.genus_residual = g;
    c.dimension_residual = v - 2;
    c.linear_value = 3L * n - s;
    c.valid = c.genus_residual == 0 && c.dimension_residual == 0;
    if (c.valid && c.linear_value != 2)
        throw std::logic_error("rational pencil equations hold but 3n - sum m != 2");
    return c;
}

/// Points of a sextic with only ordinary nodes met by a general member of the
/// pencil outside the base points, when the pencil has multiplicity n_i at the
/// i-th node: 6n - 2 sum n_i. It is at least 4 because sum n_i <= sum m_i = 3n - 2.
inline long sextic_free_intersection_bound(const PencilType& p, const std::vector<int>& node_mults) {
    if (!check_rational_pencil(p.n, p.mults).valid)
        throw PencilLemmaError("not a rational pencil: " + p.pretty());
    long sn = 0;
    for (int v : node_mults) {
        if (v < 0) throw PencilLemmaError("node multiplicities must be >= 0");
        sn += v;
    }
    long sm = std::accumulate(p.mults.begin(), p.mults.end(), 0L);
    if (sn > sm) throw PencilLemmaError("sum of node multiplicities exceeds sum of base multiplicities");
    long r = 6L * p.n - 2 * sn;
    if (r < 4) throw std::logic_error("free intersection with the sextic dropped below 4");
    return r;
}

inline constexpr int kDefaultPencilEnumBound = 8;

/// All pencil types (n; m_1 >= m_2 >= ...) with n <= n_max and m_i <= n
/// satisfying both pencil equations. Ordered by n, then by the multiplicity
/// sequence in decreasing lexicographic order.
inline std::vector<PencilType> enumerate_pencil_types(int n_max, int bound = kDefaultPencilEnumBound) {
    if (n_max > bound)
        throw PencilLemmaError("n_max " + std::to_string(n_max) + " exceeds the enumeration bound " + std::to_string(bound));
    std::vector<PencilType> out;
    for (int n = 1; n <= n_max; ++n) {
        const long target_sum = 3L * n - 2;
        const long target_g = static_cast<long>(n - 1) * (n - 2) / 2;
        std::vector<int> cur;
        // partitions of 3n-2 into parts <= n, parts non-increasing
        std::function<void(long, int, long)> rec = [&](long rest, int maxpart, long gsum) {
            if (gsum > target_g) return;
            if (rest == 0) {
                if (gsum == target_g && check_rational_pencil(n, cur).valid) out.push_back({n, cur});
                return;
            }
            for (int m = static_cast<int>(std::min<long>(maxpart, rest)); m >= 1; --m) {
                cur.push_back(m);
                rec(rest - m, m, gsum + static_cast<long>(m) * (m - 1) / 2);
                cur.pop_back();
            }
        };
        rec(target_sum, n, 0);
    }
    return out;
}

}  // namespace cremona
