// resultants.cpp -- resolution enumeration and the brute-force oracle.
#include "ratlink/resultants.hpp"

#include "ratlink/counting.hpp"
#include "ratlink/errors.hpp"

#include <algorithm>
#include <map>

namespace ratlink {

Shadow::Shadow(Word w) : entries(std::move(w)) {
    if (entries.empty()) throw DomainError("shadow needs at least one twist region");
    for (long long a : entries)
        if (a < 1) throw DomainError("shadow entries must be positive");
    if (crossings() > 62)
        throw DomainError("shadows above 62 crossings overflow 64-bit multiplicities");
}

std::vector<DistributionCell> Distribution::amphichiral() const {
    std::map<ClassKey, DistributionCell> merged;
    for (const DistributionCell& cell : cells) {
        auto [it, fresh] = merged.try_emplace(amphi_key(cell.link), cell);
        if (!fresh) it->second.count += cell.count;
    }
    std::vector<DistributionCell> out;
    out.reserve(merged.size());
    for (auto& [key, cell] : merged) out.push_back(cell);
    return out;
}

unsigned long long Distribution::total() const {
    unsigned long long t = 0;
    for (const DistributionCell& cell : cells) t += cell.count;
    return t;
}

void enumerate_assignments(
    const Shadow& s,
    const std::function<void(const Word&, unsigned long long)>& fn) {
    const std::size_t n = s.entries.size();
    // Precompute each region's binomial row: region i contributes
    // C(a_i, j) assignments with value a_i - 2j.
    std::vector<std::vector<unsigned long long>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(static_cast<std::size_t>(s.entries[i]) + 1);
        for (long long j = 0; j <= s.entries[i]; ++j)
            rows[i][static_cast<std::size_t>(j)] = binomial(s.entries[i], j);
    }
    std::vector<long long> j(n, 0);
    Word assigned = s.entries;
    for (;;) {
        unsigned long long mult = 1;
        for (std::size_t i = 0; i < n; ++i) mult *= rows[i][static_cast<std::size_t>(j[i])];
        fn(assigned, mult);
        // Odometer: rightmost index counts fastest.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (j[i] < s.entries[i]) {
                ++j[i];
                assigned[i] = s.entries[i] - 2 * j[i];
                break;
            }
            j[i] = 0;
            assigned[i] = s.entries[i];
            if (i == 0) return;
        }
    }
}

namespace {

Distribution to_sorted_distribution(std::map<ClassKey, DistributionCell>&& acc) {
    Distribution d;
    d.cells.reserve(acc.size());
    for (auto& [key, cell] : acc) d.cells.push_back(cell);
    return d;
}

} // namespace

Distribution resultant_distribution(const Shadow& s) {
    std::map<ClassKey, DistributionCell> acc;
    enumerate_assignments(s, [&](const Word& assigned, unsigned long long mult) {
        LinkClass cls = classify(assigned);
        auto [it, fresh] = acc.try_emplace(chiral_key(cls), DistributionCell{cls, 0});
        it->second.count += mult;
    });
    return to_sorted_distribution(std::move(acc));
}

Distribution brute_force_distribution(const Shadow& s, long long crossing_limit) {
    const long long c = s.crossings();
    if (c > crossing_limit)
        throw LimitExceededError("brute-force oracle capped at " +
                                 std::to_string(crossing_limit) + " crossings");
    const std::size_t n = s.entries.size();
    std::map<ClassKey, DistributionCell> acc;
    Word assigned(n);
    // Each of the c crossings independently gets +1 or -1; a region's value
    // is the signed sum of its own crossings.
    for (unsigned long long mask = 0; mask < (1ull << c); ++mask) {
        unsigned long long m = mask;
        for (std::size_t i = 0; i < n; ++i) {
            long long popcnt = 0;
            for (long long b = 0; b < s.entries[i]; ++b) {
                popcnt += static_cast<long long>(m & 1);
                m >>= 1;
            }
            assigned[i] = s.entries[i] - 2 * popcnt;
        }
        LinkClass cls = classify(assigned);
        auto [it, fresh] = acc.try_emplace(chiral_key(cls), DistributionCell{cls, 0});
        it->second.count += 1;
    }
    return to_sorted_distribution(std::move(acc));
}

std::vector<LinkClass> resultant_set(const Shadow& s, bool mirror_distinct) {
    Distribution d = resultant_distribution(s);
    std::vector<DistributionCell> cells = mirror_distinct ? d.cells : d.amphichiral();
    std::vector<LinkClass> out;
    out.reserve(cells.size());
    for (const DistributionCell& cell : cells) out.push_back(cell.link);
    return out;
}

bool is_resultant(const Shadow& s, const LinkClass& target) {
    for (const DistributionCell& cell : resultant_distribution(s).amphichiral())
        if (amphi_key(cell.link) == amphi_key(target)) return true;
    return false;
}

long long codim_resultant_count(const Shadow& s, long long k) {
    if (k < 0 || k > 3) throw DomainError("codim count supports k in 0..3");
    const long long want = s.crossings() - k;
    long long n = 0;
    for (const DistributionCell& cell : resultant_distribution(s).amphichiral())
        if (cell.link.crossing == want) ++n;
    return n;
}

long long distinct_halfsigned_count(const Shadow& s) {
    std::map<ClassKey, bool> seen;
    enumerate_assignments(s, [&](const Word& assigned, unsigned long long) {
        if (assigned[0] < 0) return;
        seen.emplace(chiral_key(classify(assigned)), true);
    });
    return static_cast<long long>(seen.size());
}

} // namespace ratlink
