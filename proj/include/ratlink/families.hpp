// families.hpp -- parametric word families whose fertility is claimed
// constant as starred entries grow by even twists.
#pragma once

#include "ratlink/word.hpp"

#include <string>
#include <vector>

namespace ratlink {

struct FamilySlot {
    long long base = 0;
    bool starred = false; // starred slots may grow by 2k, k >= 0
};

// One family row: a pattern like "3* 2 1 3*" plus the fertility value the
// whole family is expected to share.  table_id groups rows for CLI output.
struct FamilyRow {
    int table_id = 0;
    int index = 0; // position within the table, for stable output
    int stated_fertility = 0;
    std::vector<FamilySlot> slots;

    Word base_word() const;
    // Word with slot s grown by 2*offset[s] (offsets for unstarred slots
    // must be zero).
    Word offset_word(const std::vector<long long>& offsets) const;
    std::string pattern() const; // "3* 2 1 3*"
};

// Parse "table,stated_fertility,pattern" rows ('#' comments allowed).
std::vector<FamilyRow> parse_families(const std::string& text);

// The embedded family listing (families_data.cpp), parsed once.
const std::vector<FamilyRow>& builtin_families();
extern const char* const kFamiliesData;

// Fertility numbers probed across the family: the base, all starred slots
// grown together by k in {1, 2}, and each starred slot alone by k in {1, 2}.
struct FamilyStability {
    const FamilyRow* row = nullptr;
    std::vector<int> fertilities; // probe results, base first
    bool constant = false;
    int fertility = 0; // the common value when constant
};
FamilyStability check_family_stability(const FamilyRow& row);

} // namespace ratlink
