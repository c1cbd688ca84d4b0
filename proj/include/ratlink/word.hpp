// word.hpp -- integer twist words and their parsing/formatting.
#pragma once

#include <string>
#include <vector>

namespace ratlink {

// A word a1 a2 ... an of integer twist counts describing a rational tangle.
// Entries may be negative or zero in sign-assigned words; shadow words are
// all-positive.
using Word = std::vector<long long>;

Word reverse_word(const Word& w);

// Sum of |ai| -- the number of crossings the word draws.
long long twist_total(const Word& w);

// Parse a whitespace- and/or comma-separated integer list: "3 2", "2,-1,2".
// Throws DomainError on anything else (including an empty list).
Word parse_word(const std::string& text);

// "3 1 2" style rendering.
std::string format_word(const Word& w);

} // namespace ratlink
