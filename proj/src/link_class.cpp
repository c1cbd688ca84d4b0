// link_class.cpp -- fraction classification of rational links.
#include "ratlink/link_class.hpp"

#include "ratlink/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace ratlink {

namespace {

long long mod_p(long long x, long long p) {
    long long r = x % p;
    return r < 0 ? r + p : r;
}

// Inverse of q modulo p for coprime 0 < q < p (extended Euclid).
long long mod_inverse(long long q, long long p) {
    long long r0 = p, r1 = q, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long k = r0 / r1;
        long long r2 = r0 - k * r1;
        long long t2 = t0 - k * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return mod_p(t0, p);
}

// Term sum of the greedy expansion of p/q (0 < 2q <= p); equals the length
// of positive_expansion(p, q) in crossings without building the word.
long long expansion_sum(long long p, long long q) {
    long long s = 0;
    while (q != 0) {
        s += p / q;
        long long r = p % q;
        p = q;
        q = r;
    }
    return s;
}

// The at-most-two orbit members q with 2q <= p, smallest first.
std::array<long long, 2> half_orbit(long long p, long long q0, long long qinv) {
    long long a = std::min(q0, p - q0);
    long long b = std::min(qinv, p - qinv);
    if (a > b) std::swap(a, b);
    return {a, b}; // a == b when the orbit collapses
}

} // namespace

ClassKey chiral_key(const LinkClass& c) { return ClassKey{c.crossing, c.p, c.q_chiral}; }
ClassKey amphi_key(const LinkClass& c) { return ClassKey{c.crossing, c.p, c.q_amphi}; }

LinkClass unknot_class() { return LinkClass{1, 0, 0, 1, 0}; }
LinkClass unlink_class() { return LinkClass{0, 0, 0, 2, 0}; }

LinkClass classify(const Fraction& value) {
    long long p = std::llabs(value.num);
    if (p == 0) return unlink_class();
    if (p == 1) return unknot_class(); // includes the infinity closure 1/0
    // Fold the sign into q: num/den and |num|/(sgn(num)*den) are the same value.
    long long q0 = mod_p(value.num < 0 ? -value.den : value.den, p);
    long long qinv = mod_inverse(q0, p);
    auto reps = half_orbit(p, q0, qinv);
    long long crossing = std::min(expansion_sum(p, reps[0]), expansion_sum(p, reps[1]));
    LinkClass c;
    c.p = p;
    c.q_chiral = std::min(q0, qinv);
    c.q_amphi = std::min({q0, p - q0, qinv, p - qinv});
    c.components = (p % 2 == 0) ? 2 : 1;
    c.crossing = crossing;
    return c;
}

LinkClass classify(const Word& w) { return classify(cf_eval(w)); }

bool equivalent(const Word& a, const Word& b, bool mirror_distinct) {
    LinkClass ca = classify(a), cb = classify(b);
    return mirror_distinct ? chiral_key(ca) == chiral_key(cb)
                           : amphi_key(ca) == amphi_key(cb);
}

Word positive_expansion(long long p, long long q) {
    if (p < 2 || q < 1 || 2 * q > p)
        throw DomainError("positive expansion needs 0 < 2q <= p, p >= 2");
    Word w;
    while (q != 0) {
        w.push_back(p / q);
        long long r = p % q;
        p = q;
        q = r;
    }
    return w;
}

Word canonical_word(const LinkClass& cls) {
    if (cls.p < 2) throw DomainError("unknot/unlink have no positive twist word");
    long long p = cls.p;
    long long q = cls.q_amphi;
    auto reps = half_orbit(p, q, mod_inverse(q, p));
    // The two orbit members expand to reversed words with equal term sums;
    // the smaller member is the canonical pick (7/2 -> [3 2], 13/3 -> [4 3]).
    return positive_expansion(p, reps[0]);
}

LinkClass denominator_class(const Word& w) {
    if (w.empty()) throw DomainError("cannot close an empty word");
    if (w.size() == 1) return unknot_class();
    return classify(Word(w.begin(), w.end() - 1));
}

} // namespace ratlink
