// test_resultants.cpp -- shadow resolution enumeration, exact and brute force.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratlink/errors.hpp"
#include "ratlink/link_class.hpp"
#include "ratlink/resultants.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace ratlink;

namespace {

std::map<ClassKey, unsigned long long> amphi_map(const Distribution& d) {
    std::map<ClassKey, unsigned long long> m;
    for (const DistributionCell& c : d.amphichiral()) m[amphi_key(c.link)] = c.count;
    return m;
}

ClassKey key_of(const Word& w) { return amphi_key(classify(w)); }

} // namespace

TEST_CASE("shadow validation") {
    CHECK(Shadow({2, 1, 2}).crossings() == 5);
    CHECK_THROWS_AS(Shadow({2, 0, 2}), DomainError);
    CHECK_THROWS_AS(Shadow({2, -1}), DomainError);
    CHECK_THROWS_AS(Shadow({}), DomainError);
    CHECK_THROWS_AS(Shadow({63}), DomainError);
    CHECK_NOTHROW(Shadow({62}));
}

TEST_CASE("distribution of the one-region shadow [2]") {
    auto m = amphi_map(resultant_distribution(Shadow({2})));
    REQUIRE(m.size() == 2);
    CHECK(m[amphi_key(unlink_class())] == 2);
    CHECK(m[key_of({2})] == 2);
}

TEST_CASE("distribution of the figure-eight shadow [2 2]") {
    Distribution d = resultant_distribution(Shadow({2, 2}));
    CHECK(d.total() == 16);
    auto m = amphi_map(d);
    REQUIRE(m.size() == 3);
    CHECK(m[amphi_key(unknot_class())] == 12);
    CHECK(m[key_of({3})] == 2);
    CHECK(m[key_of({2, 2})] == 2);
    // Chirally the trefoil cell splits into mirrors, one resolution each.
    bool saw_trefoil_mirror_pair = false;
    for (const DistributionCell& c : d.cells)
        if (c.link.p == 3) {
            CHECK(c.count == 1);
            saw_trefoil_mirror_pair = true;
        }
    CHECK(saw_trefoil_mirror_pair);
    CHECK(d.cells.size() == 4);
}

TEST_CASE("distribution of [2 1 2]") {
    auto m = amphi_map(resultant_distribution(Shadow({2, 1, 2})));
    REQUIRE(m.size() == 4);
    CHECK(m[amphi_key(unlink_class())] == 10);
    CHECK(m[key_of({2})] == 16);
    CHECK(m[key_of({4})] == 4);
    CHECK(m[key_of({2, 1, 2})] == 2);
}

TEST_CASE("distribution of the torus shadows [10] and [12]") {
    auto m10 = amphi_map(resultant_distribution(Shadow({10})));
    CHECK(m10[amphi_key(unlink_class())] == 252);
    CHECK(m10[key_of({4})] == 240);
    auto m12 = amphi_map(resultant_distribution(Shadow({12})));
    CHECK(m12[amphi_key(unlink_class())] == 924);
    CHECK(m12[key_of({4})] == 990);
}

TEST_CASE("enumerate_assignments visits the signed binomial expansion") {
    unsigned long long mass = 0;
    long long visits = 0;
    Word first, last;
    enumerate_assignments(Shadow({2, 1}), [&](const Word& w, unsigned long long mult) {
        if (visits == 0) first = w;
        last = w;
        mass += mult;
        ++visits;
    });
    CHECK(visits == 6); // (2+1) * (1+1) value combinations
    CHECK(mass == 8);   // 2^3 resolutions
    CHECK(first == Word{2, 1});   // all-positive corner first
    CHECK(last == Word{-2, -1});  // rightmost varies fastest
}

TEST_CASE("brute force agrees with the assignment enumeration") {
    for (const Word& w : {Word{2, 1, 2}, Word{3, 3}, Word{4, 2, 1}, Word{5}}) {
        Distribution fast = resultant_distribution(Shadow(w));
        Distribution brute = brute_force_distribution(Shadow(w));
        REQUIRE(fast.cells.size() == brute.cells.size());
        for (std::size_t i = 0; i < fast.cells.size(); ++i) {
            CHECK(chiral_key(fast.cells[i].link) == chiral_key(brute.cells[i].link));
            CHECK(fast.cells[i].count == brute.cells[i].count);
        }
    }
    CHECK_THROWS_AS(brute_force_distribution(Shadow({21})), LimitExceededError);
    CHECK_NOTHROW(brute_force_distribution(Shadow({21}), 21));
}

TEST_CASE("resultant sets and membership") {
    CHECK(resultant_set(Shadow({2, 2, 2, 2}), false).size() == 11);
    // The chiral set refines the amphi set: same classes after merging.
    std::set<ClassKey> merged;
    for (const LinkClass& c : resultant_set(Shadow({2, 2, 2, 2}), true))
        merged.insert(amphi_key(c));
    CHECK(merged.size() == 11);

    Shadow s({2, 1, 2});
    CHECK(is_resultant(s, classify(Word{2, 1, 2})));
    CHECK(is_resultant(s, classify(Word{4})));
    CHECK(is_resultant(s, unlink_class()));
    CHECK_FALSE(is_resultant(s, classify(Word{3})));     // knots never appear
    CHECK_FALSE(is_resultant(s, classify(Word{3, 3}))); // 10/3 needs 6 crossings
}

TEST_CASE("resultant sets are sorted by (crossing, p, q)") {
    for (bool chiral : {false, true}) {
        std::vector<LinkClass> set = resultant_set(Shadow({3, 2, 2}), chiral);
        auto key = chiral ? chiral_key : amphi_key;
        CHECK(std::is_sorted(set.begin(), set.end(),
                             [&](const LinkClass& a, const LinkClass& b) {
                                 return key(a) < key(b);
                             }));
    }
}

TEST_CASE("codimension counts") {
    // [2 1 2] reaches only itself at the top level (crossing 5).
    CHECK(codim_resultant_count(Shadow({2, 1, 2}), 0) == 1);
    CHECK(codim_resultant_count(Shadow({2, 1, 1, 1, 2}), 1) == 2);
    CHECK_THROWS_AS(codim_resultant_count(Shadow({2, 1, 2}), 4), DomainError);
    CHECK_THROWS_AS(codim_resultant_count(Shadow({2, 1, 2}), -1), DomainError);
}

TEST_CASE("distinct halfsigned count") {
    // [3 2] with c1 >= 0: classes 7/2, 5/2, 3/2, unknot.
    CHECK(distinct_halfsigned_count(Shadow({3, 2})) == 4);
    CHECK(distinct_halfsigned_count(Shadow({1})) == 1); // [1] and [-1] both unknot
}

TEST_CASE("every resolution keeps the shadow's component count") {
    for (const Word& w : {Word{2, 1, 2}, Word{2, 2}, Word{3, 1, 2}, Word{6}}) {
        int comp = classify(w).components;
        for (const LinkClass& c : resultant_set(Shadow(w), false))
            CHECK(c.components == comp);
    }
}

TEST_CASE("one-region nontrivial resultants are the even torus links") {
    // Every resolution of [2 a2] beyond the trivial classes comes from the
    // c1 = +-2 slice, hence closes to a fraction (2*c2 +- 1)/c2.
    for (long long a2 = 2; a2 <= 5; ++a2) {
        std::set<ClassKey> expect;
        for (long long c2 = -a2; c2 <= a2; c2 += 2) {
            if (c2 == 0) continue;
            expect.insert(key_of({2, c2}));
        }
        for (const LinkClass& r : resultant_set(Shadow({2, a2}), false)) {
            if (r.crossing < 2) continue;
            CHECK(expect.count(amphi_key(r)) == 1);
        }
    }
}
