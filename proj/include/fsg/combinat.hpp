// combinat.hpp — factorials, binomials, colex subset enumeration.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace fsg {

inline std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: n must be in [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return b;
}

// Visits every k-subset of {0,...,n-1} in colexicographic order as a bitmask.
// The visitor returns false to stop early; the function returns true iff the
// scan ran to completion.
template <typename Visitor>
bool for_each_k_subset_colex(int n, int k, Visitor&& visit) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("for_each_k_subset_colex: need 0 <= k <= n");
    if (k == 0) return visit(std::uint16_t{0});
    std::array<int, 20> s{};
    for (int i = 0; i < k; ++i) s[i] = i;
    for (;;) {
        std::uint16_t mask = 0;
        for (int i = 0; i < k; ++i) mask |= static_cast<std::uint16_t>(1u << s[i]);
        if (!visit(mask)) return false;
        int i = 0;
        while (i < k) {
            int limit = (i + 1 < k) ? s[i + 1] : n;
            if (s[i] + 1 < limit) break;
            ++i;
        }
        if (i == k) return true;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j;
    }
}

}  // namespace fsg
