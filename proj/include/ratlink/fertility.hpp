// fertility.hpp -- fertility numbers, trunk/branch machinery, and the
// local-fertility verification sweep.
#pragma once

#include "ratlink/link_class.hpp"
#include "ratlink/word.hpp"

#include <vector>

namespace ratlink {

// One mirror-blind representative per nontrivial rational link class with
// the given component count and crossing number <= max_crossing, sorted by
// (crossing, p, q).  max_crossing <= 16.
std::vector<LinkClass> generate_rational_classes(long long max_crossing, int components);

// Largest m such that every nontrivial rational class with matching
// component count and crossing number <= m is a mirror-blind resolution of
// the class's minimal-diagram shadow.  Only crossing numbers at which
// targets exist count as levels (there are no 3-crossing two-component
// links, so a Hopf-only reach is m = 2, not 3).  Capped at 7 for knots and
// 6 for links: above that, non-rational targets exist and resolutions of
// rational shadows can never be non-rational.  UndefinedError on the
// unknot/unlink.
int fertility_number(const LinkClass& cls);
int fertility_number(const Word& w);

// True iff every matching-component rational class with crossing number
// strictly below the class's own is a resolution.  Meaningful for knots up
// to 8 crossings and links up to 7; beyond that non-rational targets exist
// and the answer is false outright.
bool is_fertile(const LinkClass& cls);
bool is_fertile(const Word& w);

// As fertility_number but with targets capped at max_crossing instead of
// the rationality bound.
int rational_fertility_number(const LinkClass& cls, long long max_crossing = 12);
int rational_fertility_number(const Word& w, long long max_crossing = 12);

// The least-complicated canonical words of a given length: ends in
// {(2,2),(3,2),(3,3)}, interior entries in {1,2}, one representative per
// mirror-blind class (of a reversal pair, the lexicographically larger
// generated word).  |result| <= 3 * 2^(length-1).
std::vector<Word> trunk_words(int length);

// Minimum fertility_number over trunk members with the given component
// count; UndefinedError when none match.
int min_trunk_fertility(int length, int components);

// Write a canonical word as trunk parent + per-entry even offsets:
// parent ends are 2/3 by parity, interior 1/2 by parity, offsets
// (a_i - parent_i)/2.  NonCanonicalWordError unless first/last >= 2 and
// interior >= 1.
struct BranchDecomposition {
    Word trunk;
    std::vector<long long> offsets;
};
BranchDecomposition branch_decompose(const Word& w);

// k-fertility check (k = 7 for knots, 6 for links) of every matching
// member of the two trunks below length n plus the word [2 1^(n-2) 2].
struct ThresholdItem {
    Word word;
    int fertility = 0;
    bool pass = false;
};
struct ThresholdReport {
    int components = 0;
    int n = 0;
    int required = 0;
    std::vector<ThresholdItem> items;
    bool all_pass = false;
};
ThresholdReport verify_local_fertility_threshold(int components, int n);

} // namespace ratlink
