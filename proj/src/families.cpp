// families.cpp -- starred-family parsing and the stability probe.
#include "ratlink/families.hpp"

#include "ratlink/errors.hpp"
#include "ratlink/fertility.hpp"

#include <sstream>

namespace ratlink {

Word FamilyRow::base_word() const {
    Word w;
    w.reserve(slots.size());
    for (const FamilySlot& s : slots) w.push_back(s.base);
    return w;
}

Word FamilyRow::offset_word(const std::vector<long long>& offsets) const {
    if (offsets.size() != slots.size())
        throw DomainError("family offsets must match the slot count");
    Word w;
    w.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (offsets[i] < 0 || (!slots[i].starred && offsets[i] != 0))
            throw DomainError("only starred slots may grow");
        w.push_back(slots[i].base + 2 * offsets[i]);
    }
    return w;
}

std::string FamilyRow::pattern() const {
    std::string s;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(slots[i].base);
        if (slots[i].starred) s += '*';
    }
    return s;
}

std::vector<FamilyRow> parse_families(const std::string& text) {
    std::vector<FamilyRow> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0, prev_table = 0, index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.erase(line.begin());
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string table_field, fert_field, pattern_field;
        if (!std::getline(row, table_field, ',') || !std::getline(row, fert_field, ',') ||
            !std::getline(row, pattern_field))
            throw DomainError("family line " + std::to_string(lineno) + ": expected 3 fields");
        FamilyRow fr;
        fr.table_id = std::stoi(table_field);
        fr.stated_fertility = std::stoi(fert_field);
        std::istringstream pat(pattern_field);
        std::string tok;
        while (pat >> tok) {
            FamilySlot slot;
            if (tok.back() == '*') {
                slot.starred = true;
                tok.pop_back();
            }
            slot.base = std::stoll(tok);
            if (slot.base < 1)
                throw DomainError("family line " + std::to_string(lineno) + ": entries must be positive");
            fr.slots.push_back(slot);
        }
        if (fr.slots.empty())
            throw DomainError("family line " + std::to_string(lineno) + ": empty pattern");
        index = (fr.table_id == prev_table) ? index + 1 : 1;
        prev_table = fr.table_id;
        fr.index = index;
        rows.push_back(std::move(fr));
    }
    return rows;
}

const std::vector<FamilyRow>& builtin_families() {
    static const std::vector<FamilyRow> rows = parse_families(kFamiliesData);
    return rows;
}

FamilyStability check_family_stability(const FamilyRow& row) {
    FamilyStability out;
    out.row = &row;
    std::vector<std::size_t> starred;
    for (std::size_t i = 0; i < row.slots.size(); ++i)
        if (row.slots[i].starred) starred.push_back(i);

    std::vector<std::vector<long long>> probes;
    probes.emplace_back(row.slots.size(), 0); // the base word
    for (long long k : {1ll, 2ll}) {          // all starred slots together
        std::vector<long long> off(row.slots.size(), 0);
        for (std::size_t i : starred) off[i] = k;
        probes.push_back(off);
    }
    for (std::size_t i : starred) // each starred slot alone
        for (long long k : {1ll, 2ll}) {
            std::vector<long long> off(row.slots.size(), 0);
            off[i] = k;
            probes.push_back(off);
        }

    out.constant = true;
    for (const auto& off : probes) {
        int f = fertility_number(row.offset_word(off));
        out.fertilities.push_back(f);
        if (f != out.fertilities.front()) out.constant = false;
    }
    out.fertility = out.fertilities.front();
    return out;
}

} // namespace ratlink
