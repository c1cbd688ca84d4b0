// counting.cpp -- closed-form resolution counts.
#include "ratlink/counting.hpp"

#include "ratlink/errors.hpp"

#include <cstdlib>

namespace ratlink {

namespace {

unsigned long long mul_u(unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
    return r;
}

unsigned long long add_u(unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
    return r;
}

unsigned long long pow2(long long e) {
    if (e < 0 || e > 62) throw DomainError("2^e out of supported range");
    return 1ull << e;
}

bool odd(long long x) { return x % 2 != 0; }

void require_even(long long x, const char* what) {
    if (odd(x)) throw ParityMismatchError(std::string(what) + " must be even");
}

} // namespace

unsigned long long binomial(long long n, long long r) {
    if (n < 0 || n > 62) throw DomainError("binomial supported for 0 <= n <= 62");
    if (r < 0 || r > n) return 0; // impossible index convention
    r = std::min(r, n - r);
    // Exact multiplicative form; every prefix product is itself a binomial,
    // and C(62,31) < 2^63, so unsigned __int128 never truncates.
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) acc = acc * static_cast<unsigned long long>(n - r + i) / static_cast<unsigned long long>(i);
    return static_cast<unsigned long long>(acc);
}

unsigned long long torus_resultant_count(long long a1, long long k) {
    if (a1 < 1 || a1 > 62) throw DomainError("region size must be in 1..62");
    if (odd(a1 - k)) throw ParityMismatchError("k must match the parity of a1");
    return binomial(a1, (a1 - std::llabs(k)) / 2);
}

TwoTangleEvenEven two_tangle_counts_even_even(long long a1, long long a2,
                                              long long k, long long l) {
    if (a1 < 2 || a2 < 2 || odd(a1) || odd(a2))
        throw DomainError("both region sizes must be even and >= 2");
    if (a1 + a2 > 62) throw DomainError("total crossings above 62 unsupported");
    if (k < 2 || l < 2) throw DomainError("target indices must be >= 2");
    require_even(k, "k");
    require_even(l, "l");
    TwoTangleEvenEven out;
    unsigned long long straight = mul_u(binomial(a1, (a1 - k) / 2), binomial(a2, (a2 - l) / 2));
    unsigned long long crossed = mul_u(binomial(a1, (a1 - l) / 2), binomial(a2, (a2 - k) / 2));
    out.det_plus = add_u(straight, crossed);
    out.det_minus = out.det_plus;
    out.unknot = add_u(mul_u(pow2(a2), binomial(a1, a1 / 2)),
                       mul_u(pow2(a1) - binomial(a1, a1 / 2), binomial(a2, a2 / 2)));
    return out;
}

TwoTangleEvenOdd two_tangle_counts_even_odd(long long a1, long long a2,
                                            long long k, long long l) {
    if (a1 < 2 || odd(a1)) throw DomainError("first region size must be even and >= 2");
    if (a2 < 3 || !odd(a2)) throw DomainError("second region size must be odd and >= 3");
    if (a1 + a2 > 61) throw DomainError("total crossings above 61 unsupported");
    if (k < 2 || odd(k)) throw DomainError("k must be even and >= 2");
    if (l < 3 || !odd(l)) throw DomainError("l must be odd and >= 3");
    TwoTangleEvenOdd out;
    out.det_plus = mul_u(2, mul_u(binomial(a1, (a1 - k) / 2), binomial(a2, (a2 - l) / 2)));
    out.det_minus = out.det_plus;
    out.next_torus = mul_u(2, mul_u(binomial(a2, (a2 - 1) / 2),
                                    add_u(binomial(a1, (a1 - k) / 2),
                                          binomial(a1, (a1 - (k + 2)) / 2))));
    out.unknot = add_u(mul_u(pow2(a2), binomial(a1, a1 / 2)),
                       mul_u(2, mul_u(binomial(a1, (a1 - 2) / 2), binomial(a2, (a2 - 1) / 2))));
    return out;
}

unsigned long long three_tangle_unknot_count(long long a1, long long a2, long long a3,
                                             ThreeTangleCase parity_case) {
    if (a1 < 1 || a2 < 1 || a3 < 1) throw DomainError("region sizes must be >= 1");
    if (a1 + a2 + a3 > 61) throw DomainError("total crossings above 61 unsupported");
    const bool eeo = !odd(a1) && !odd(a2) && odd(a3);
    const bool eoo = !odd(a1) && odd(a2) && odd(a3);
    if (parity_case == ThreeTangleCase::even_even_odd) {
        if (!eeo) throw UnsupportedCaseError("parities must be (even, even, odd)");
        // c1 = 0 frees c2 entirely; otherwise the middle region must cancel
        // and the tail must hit 1/(c1 -+ 1).
        unsigned long long t1 = mul_u(pow2(a2 + 1),
                                      mul_u(binomial(a1, a1 / 2), binomial(a3, (a3 - 1) / 2)));
        unsigned long long t2 = mul_u(2, mul_u(binomial(a1, (a1 - 2) / 2),
                                               mul_u(binomial(a2, (a2 - 2) / 2),
                                                     binomial(a3, (a3 - 1) / 2))));
        unsigned long long t3 = 0;
        for (long long c1 = 2; c1 <= a1; c1 += 2)
            t3 = add_u(t3, mul_u(binomial(a1, (a1 - c1) / 2),
                                 add_u(binomial(a3, (a3 - c1 + 1) / 2),
                                       binomial(a3, (a3 - c1 - 1) / 2))));
        t3 = mul_u(2, mul_u(binomial(a2, a2 / 2), t3));
        return add_u(t1, add_u(t2, t3));
    }
    if (!eoo) throw UnsupportedCaseError("parities must be (even, odd, odd)");
    unsigned long long t1 = mul_u(pow2(a2 + 1),
                                  mul_u(binomial(a1, a1 / 2), binomial(a3, (a3 - 1) / 2)));
    unsigned long long t2 = mul_u(2, mul_u(binomial(a1, (a1 - 2) / 2),
                                           mul_u(binomial(a2, (a2 - 1) / 2),
                                                 binomial(a3, (a3 - 3) / 2))));
    unsigned long long t3 = mul_u(2, mul_u(pow2(a1) - binomial(a1, a1 / 2),
                                           mul_u(binomial(a2, (a2 - 1) / 2),
                                                 binomial(a3, (a3 - 1) / 2))));
    return add_u(t1, add_u(t2, t3));
}

unsigned long long max_unique_resultants(const Shadow& s) {
    unsigned long long bound = static_cast<unsigned long long>(s.entries[0] + 2) / 2;
    for (std::size_t i = 1; i < s.entries.size(); ++i)
        bound = mul_u(bound, static_cast<unsigned long long>(s.entries[i] + 1));
    return bound;
}

unsigned long long codim_upper_bound(long long d, long long k) {
    if (d < 1 || d > 62) throw DomainError("word length must be in 1..62");
    if (k == 2) return add_u(binomial(d, 1), binomial(d - 1, 2));
    if (k == 3) return add_u(mul_u(binomial(d, 1), binomial(d - 1, 1)), binomial(d - 1, 3));
    throw DomainError("codim bound supports k in {2, 3}");
}

long long unlink_domination_threshold(long long k) {
    if (k < 2 || k > 24 || odd(k)) throw DomainError("k must be even with 2 <= k <= 24");
    // 2*C(n,(n-k)/2) >= C(n,n/2)  <=>  2*prod_{j=1..k/2}(h-k/2+j) >= prod(h+j)
    // with h = n/2 (common factors cancelled), which fits in 128 bits for
    // every n this search can reach.
    for (long long n = k; n <= 4096; n += 2) {
        const long long h = n / 2;
        unsigned __int128 lo = 2, hi = 1;
        for (long long j = 1; j <= k / 2; ++j) {
            lo *= static_cast<unsigned long long>(h - k / 2 + j);
            hi *= static_cast<unsigned long long>(h + j);
        }
        if (lo >= hi) return n;
    }
    throw Error("internal: domination threshold search did not converge");
}

DenominatorCount denominator_resolution_count(const Shadow& s) {
    DenominatorCount out;
    out.multiplier = pow2(s.entries.back());
    out.residual.assign(s.entries.begin(), s.entries.end() - 1);
    return out;
}

} // namespace ratlink
