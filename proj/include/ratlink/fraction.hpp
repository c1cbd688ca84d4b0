// fraction.hpp -- exact projective rationals and continued-fraction evaluation.
#pragma once

#include "ratlink/word.hpp"

#include <string>

namespace ratlink {

// A projective rational p/q, kept normalized: gcd(|p|, |q|) == 1, q >= 0,
// infinity stored as 1/0, zero stored as 0/1.  Signs live in the numerator.
struct Fraction {
    long long num = 0;
    long long den = 1;

    bool is_infinity() const { return den == 0; }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Reduce an arbitrary (num, den) != (0, 0) to the normal form above.
Fraction normalized(long long num, long long den);

// Value of a1 + 1/(a2 + 1/(... + 1/an)), evaluated exactly right to left:
// starting from (p, q) = (an, 1), each step maps (p, q) to (ai*p + q, p).
// Zero entries and intermediate infinities are legal projectively.  Throws
// DomainError on an empty word and OverflowError if an intermediate
// continuant leaves the 64-bit range.
Fraction cf_eval(const Word& w);

// "7/2", "1/0" style rendering.
std::string format_fraction(const Fraction& f);

// Parse "p/q" or a bare integer "p".  Throws DomainError on bad syntax or
// the empty symbol 0/0.
Fraction parse_fraction(const std::string& text);

} // namespace ratlink
