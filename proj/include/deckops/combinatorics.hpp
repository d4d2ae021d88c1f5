#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace deckops {

// C(n, k) as an exact integer; zero outside 0 <= k <= n.
inline mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return mpz_class(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// 64-bit binomial for subset ranking and loop bounds; caller keeps C(n,k)
// within range by construction.
inline std::uint64_t binomial_u64(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

// Visits every k-subset of {0,...,n-1} as a sorted index vector, in
// lexicographic order. The reference passed to the callback is reused
// between calls.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        visit(static_cast<const std::vector<int>&>(c));
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace deckops
