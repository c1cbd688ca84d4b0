// resultants.hpp -- enumeration of all resolutions of a rational shadow.
#pragma once

#include "ratlink/link_class.hpp"
#include "ratlink/word.hpp"

#include <functional>
#include <vector>

namespace ratlink {

// The shadow of a rational-link diagram: the twist-region sizes with all
// over/under information forgotten.  Entries must be >= 1.
struct Shadow {
    Word entries;

    explicit Shadow(Word w);
    long long crossings() const { return twist_total(entries); }
};

struct DistributionCell {
    LinkClass link;
    unsigned long long count = 0;
};

// Exact multiset of resolution classes of a shadow.  Cells are keyed
// chirally (a link and its mirror stay separate) and sorted by
// (crossing, p, q); amphichiral() re-merges mirror pairs.
struct Distribution {
    std::vector<DistributionCell> cells;

    std::vector<DistributionCell> amphichiral() const;
    unsigned long long total() const; // == 2^crossings
};

// Visit every assignment c_i in {a_i, a_i-2, ..., -a_i} together with its
// multiplicity prod_i C(a_i, (a_i-c_i)/2), rightmost entry varying fastest.
void enumerate_assignments(
    const Shadow& s,
    const std::function<void(const Word&, unsigned long long)>& fn);

// Distribution via the assignment enumeration (fast path).  Shadows are
// limited to 62 crossings so the mass 2^c stays in 64 bits.
Distribution resultant_distribution(const Shadow& s);

// The same distribution computed crossing by crossing: all 2^c ways to give
// each individual crossing a sign.  Oracle use only; throws
// LimitExceededError above crossing_limit.
Distribution brute_force_distribution(const Shadow& s, long long crossing_limit = 20);

// Distinct resolution classes, sorted by (crossing, p, q).
std::vector<LinkClass> resultant_set(const Shadow& s, bool mirror_distinct);

// Mirror-blind membership test.
bool is_resultant(const Shadow& s, const LinkClass& target);

// Number of distinct mirror-blind resultants with crossing number exactly
// crossings(s) - k.
long long codim_resultant_count(const Shadow& s, long long k);

// Distinct chiral classes among assignments with c_1 >= 0 (the sign
// convention under which the closed-form distinct-set bound is stated).
long long distinct_halfsigned_count(const Shadow& s);

} // namespace ratlink
