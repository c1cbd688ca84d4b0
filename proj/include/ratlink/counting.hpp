// counting.hpp -- closed-form resolution counts and bounds, all exact.
#pragma once

#include "ratlink/resultants.hpp"

namespace ratlink {

// C(n, r): 0 when r < 0 or r > n (the "impossible index" convention used by
// all count formulas here); exact for n <= 62, DomainError beyond.
unsigned long long binomial(long long n, long long r);

// One twist region [a1]: number of resolutions closing to the torus link of
// fraction k/1, for one choice of sign of k (the mirror count is equal).
// ParityMismatchError when k and a1 differ in parity; k beyond |a1| gives 0.
unsigned long long torus_resultant_count(long long a1, long long k);

// Two twist regions [a1, a2], both even.  Nontrivial resolutions land on the
// families N[k l] (determinant k*l + 1) and N[(k-1) 1 (l-1)] (determinant
// k*l - 1) for even 2 <= k, 2 <= l; the two counts coincide.
struct TwoTangleEvenEven {
    unsigned long long det_plus = 0;  // resolutions closing to N[k l]
    unsigned long long det_minus = 0; // resolutions closing to N[(k-1) 1 (l-1)]
    unsigned long long unknot = 0;
};
TwoTangleEvenEven two_tangle_counts_even_even(long long a1, long long a2,
                                              long long k, long long l);

// Two twist regions [a1, a2], a1 even >= 2 and a2 odd >= 3.  Targets are the
// determinant k*l+1 / k*l-1 pair (equal counts, k even >= 2, l odd >= 3),
// the torus link of fraction (k+1)/1, and the unknot.
struct TwoTangleEvenOdd {
    unsigned long long det_plus = 0;
    unsigned long long det_minus = 0;
    unsigned long long next_torus = 0; // resolutions closing to N[k+1]
    unsigned long long unknot = 0;
};
TwoTangleEvenOdd two_tangle_counts_even_odd(long long a1, long long a2,
                                            long long k, long long l);

// Three twist regions: unknot counts exist in closed form for exactly two
// parity patterns.  The tag must match the parities of (a1, a2, a3);
// anything else is UnsupportedCaseError.
enum class ThreeTangleCase { even_even_odd, even_odd_odd };
unsigned long long three_tangle_unknot_count(long long a1, long long a2, long long a3,
                                             ThreeTangleCase parity_case);

// Upper bound on the number of distinct resultants reachable with c1 >= 0:
// ceil((a1+1)/2) * prod_{i>=2} (a_i+1).
unsigned long long max_unique_resultants(const Shadow& s);

// Upper bound on the number of distinct classes k crossings below the top:
// k=2 -> C(d,1) + C(d-1,2); k=3 -> C(d,1)*C(d-1,1) + C(d-1,3), where d is
// the word length.  Only k in {2, 3}.
unsigned long long codim_upper_bound(long long d, long long k);

// Smallest even n with 2*C(n, (n-k)/2) >= C(n, n/2): from that size on, a
// one-region shadow [n] has at least as many resolutions closing to the
// fraction-k/1 link (counting both mirrors) as to the unlink.  k even,
// 2 <= k <= 24.
long long unlink_domination_threshold(long long k);

// Resolutions of the denominator closure: the last region contributes a
// free factor 2^{a_n} and the rest behaves like the numerator closure of
// the shortened shadow (empty residual means every resolution is unknotted).
struct DenominatorCount {
    unsigned long long multiplier = 0;
    Word residual;
};
DenominatorCount denominator_resolution_count(const Shadow& s);

} // namespace ratlink
