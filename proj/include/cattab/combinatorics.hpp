#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cattab {

using count_type = std::uint64_t;

constexpr count_type binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n-k+i) / i stays integral at every step
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<count_type>::max()) {
            throw std::overflow_error("binomial does not fit in 64 bits");
        }
    }
    return static_cast<count_type>(result);
}

/// C_n = binom(2n, n) / (n + 1).
constexpr count_type catalan(int n)
{
    if (n < 0) throw std::domain_error("catalan: negative argument");
    unsigned __int128 c = 1;
    for (int i = 0; i < n; ++i) {
        // C_{i+1} = C_i * 2(2i+1) / (i+2)
        c = c * static_cast<unsigned>(2 * (2 * i + 1)) / static_cast<unsigned>(i + 2);
        if (c > std::numeric_limits<count_type>::max()) {
            throw std::overflow_error("catalan does not fit in 64 bits");
        }
    }
    return static_cast<count_type>(c);
}

} // namespace cattab
