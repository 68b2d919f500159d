// Brute-force reference computations for the test suites. Everything here is
// independent of the library's own algebraic paths: plain polynomial
// expansion, digit counting, and cofactor determinants over exact integers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// Coefficients of sum_{k=0}^{p-1} (x+1)^{k p^{m-1}} by schoolbook polynomial
// arithmetic over exact integers (index = degree, leading term included).
inline std::vector<mpz_class> expand_min_poly(unsigned long p, unsigned m) {
    unsigned long pm1 = 1;
    for (unsigned i = 1; i < m; ++i) pm1 *= p;
    const unsigned long phi = pm1 * (p - 1);

    std::vector<mpz_class> acc{1};  // running (x+1)^j
    std::vector<mpz_class> sum(phi + 1);
    sum[0] = 1;  // k = 0 term
    unsigned long next = pm1;
    for (unsigned long j = 1; j <= (p - 1) * pm1; ++j) {
        std::vector<mpz_class> nxt(acc.size() + 1);
        for (size_t i = 0; i < acc.size(); ++i) {
            nxt[i] += acc[i];
            nxt[i + 1] += acc[i];
        }
        acc = std::move(nxt);
        if (j == next) {
            for (size_t i = 0; i < acc.size(); ++i) sum[i] += acc[i];
            next += pm1;
        }
    }
    return sum;
}

// Number of carries when adding a and b in base p.
inline unsigned long carries_base_p(unsigned long a, unsigned long b, unsigned long p) {
    unsigned long carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        const unsigned long s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

// Exact determinant by dynamic programming over column subsets (Laplace
// expansion along rows); no divisions, no pivoting assumptions.
inline mpz_class exact_det(const std::vector<mpz_class>& a, unsigned long n) {
    std::vector<mpz_class> dp(1UL << n);
    dp[0] = 1;
    std::vector<unsigned long> popcount(1UL << n, 0);
    for (unsigned long s = 1; s < (1UL << n); ++s) {
        popcount[s] = popcount[s >> 1] + (s & 1UL);
        const unsigned long row = popcount[s] - 1;
        mpz_class acc = 0;
        unsigned long pos = 0;  // index of column j within the sorted subset
        for (unsigned long j = 0; j < n; ++j) {
            if (!(s & (1UL << j))) continue;
            const mpz_class term = dp[s & ~(1UL << j)] * a[row * n + j];
            if ((row + pos) % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
            ++pos;
        }
        dp[s] = acc;
    }
    return dp[(1UL << n) - 1];
}

inline mpz_class random_mpz(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return mpz_class(dist(rng));
}

}  // namespace oracles
