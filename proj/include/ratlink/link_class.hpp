// link_class.hpp -- classification of rational links by their fraction.
#pragma once

#include "ratlink/fraction.hpp"
#include "ratlink/word.hpp"

#include <compare>

namespace ratlink {

// The equivalence class of the numerator closure N[a1 ... an].
//
// With p/q = cf_eval(a1 ... an), two closures are the same unoriented link
// exactly when they share p and q' == q or q*q' == 1 (mod p); mirroring maps
// q to -q (mod p).  The class stores p together with canonical orbit
// representatives: q_chiral = min{q, q^-1} identifies the link up to isotopy,
// q_amphi = min{+-q, +-q^-1} identifies it up to isotopy and mirror image.
// p == 0 is the two-component unlink, p == 1 the unknot (q fields are 0).
struct LinkClass {
    long long p = 0;
    long long q_chiral = 0;
    long long q_amphi = 0;
    int components = 0;      // 1 for knots, 2 for two-component links
    long long crossing = 0;  // minimal crossing number, 0 for unknot/unlink

    friend auto operator<=>(const LinkClass&, const LinkClass&) = default;
};

// Dedup/order keys.  The chiral key separates a chiral link from its mirror;
// the amphi key merges them.  Ordering is (crossing, p, q) everywhere.
struct ClassKey {
    long long crossing = 0;
    long long p = 0;
    long long q = 0;
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};
ClassKey chiral_key(const LinkClass& c);
ClassKey amphi_key(const LinkClass& c);

LinkClass classify(const Fraction& value);
LinkClass classify(const Word& w);
LinkClass unknot_class();
LinkClass unlink_class();

// True when the two words close to the same link.  mirror_distinct keeps a
// link apart from its mirror image; without it the comparison is mirror-blind.
bool equivalent(const Word& a, const Word& b, bool mirror_distinct);

// The minimal-crossing all-positive word for the class: first and last
// entries >= 2, interior entries >= 1, term sum == crossing number.  The
// (at most two) candidates are reversals of each other; the expansion of the
// smaller orbit representative is returned (7/2 -> [3 2]).  Throws
// DomainError for p < 2 (no such word exists).
Word canonical_word(const LinkClass& cls);

// Greedy all-positive expansion of p/q with 2q <= p; used by canonical_word
// and exposed for the enumeration of canonical words.
Word positive_expansion(long long p, long long q);

// Class of the denominator closure D[a1 ... an] == N[a1 ... a_{n-1}]
// (D of a single twist region is the unknot).
LinkClass denominator_class(const Word& w);

} // namespace ratlink
