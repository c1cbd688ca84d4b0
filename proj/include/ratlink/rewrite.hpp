// rewrite.hpp -- untangling rewrites on sign-assigned words.
#pragma once

#include "ratlink/link_class.hpp"
#include "ratlink/word.hpp"

#include <cstddef>
#include <vector>

namespace ratlink {

// One untangling move at position i (0-based).  Requires w[i] != 0 and
// either w[i+1] == 0 or sign(w[i+1]) != sign(w[i]); otherwise SignsAgreeError.
//
//   zero successor:  [.., a, 0, b, t..]      -> [.., a + b, t..]
//   opposite signs:  [.., s*a, -s*b, t..]    -> [.., s*(a-1), s, s*(b-1), -t..]
//
// A zero in the final position has no successor to conduct into and is a
// DomainError here (normalize drops a trailing "x 0" pair instead).  Both
// forms preserve cf_eval exactly (the second is the identity
// c - 1/x == (c-1) + 1/(1 + 1/(x-1)) applied with the tail negated); the
// opposite-sign form lowers the twist total by exactly one.  Entries that
// become zero are left in place for the caller to merge.
Word untangle_step(const Word& w, std::size_t i);

struct NormalizeResult {
    LinkClass link;
    std::vector<Word> trace; // trace.front() == input, one entry per rewrite
};

// Rewrite w until no adjacent entries disagree in sign.  Rule order per pass:
// drop a trailing "x 0" pair, merge around an interior zero, otherwise apply
// untangle_step at the leftmost sign disagreement.  Terminal words are
// all-one-sign, possibly behind a single leading zero (a denominator-closure
// form, reached when |cf_eval| < 1), or the two-entry infinity form [x, 0].
// Every trace step preserves cf_eval exactly; the step count never exceeds
// twist_total(w) + w.size().
NormalizeResult normalize(const Word& w);

} // namespace ratlink
