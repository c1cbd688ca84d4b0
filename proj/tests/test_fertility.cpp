// test_fertility.cpp -- fertility numbers, trunks, branches, thresholds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratlink/errors.hpp"
#include "ratlink/fertility.hpp"
#include "ratlink/link_class.hpp"
#include "ratlink/resultants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace ratlink;

namespace {

// Independent enumeration of canonical words with the given term sum.
std::vector<Word> canonical_words(long long total) {
    std::vector<Word> out;
    auto rec = [&](auto&& self, Word& pref, long long rem) -> void {
        if (rem >= 2) {
            pref.push_back(rem);
            out.push_back(pref);
            pref.pop_back();
        }
        for (long long nxt = 1; nxt + 2 <= rem; ++nxt) {
            pref.push_back(nxt);
            self(self, pref, rem - nxt);
            pref.pop_back();
        }
    };
    for (long long first = 2; first <= total; ++first) {
        Word pref{first};
        if (first == total) out.push_back(pref);
        else rec(rec, pref, total - first);
    }
    return out;
}

std::map<long long, int> count_by_crossing(const std::vector<LinkClass>& classes) {
    std::map<long long, int> m;
    for (const LinkClass& c : classes) ++m[c.crossing];
    return m;
}

} // namespace

TEST_CASE("generate_rational_classes counts per crossing level") {
    auto knots = generate_rational_classes(7, 1);
    CHECK(count_by_crossing(knots) ==
          std::map<long long, int>{{3, 1}, {4, 1}, {5, 2}, {6, 3}, {7, 7}});
    auto links = generate_rational_classes(6, 2);
    CHECK(count_by_crossing(links) ==
          std::map<long long, int>{{2, 1}, {4, 1}, {5, 1}, {6, 3}});

    auto small = generate_rational_classes(4, 1);
    REQUIRE(small.size() == 2);
    CHECK(amphi_key(small[0]) == amphi_key(classify(Word{3})));
    CHECK(amphi_key(small[1]) == amphi_key(classify(Word{2, 2})));

    CHECK_THROWS_AS(generate_rational_classes(1, 1), DomainError);
    CHECK_THROWS_AS(generate_rational_classes(17, 1), DomainError);
    CHECK_THROWS_AS(generate_rational_classes(6, 3), DomainError);
}

TEST_CASE("fertility numbers of small classes") {
    CHECK(fertility_number(Word{3}) == 3);
    CHECK(fertility_number(Word{2}) == 2);
    CHECK(fertility_number(Word{4}) == 4);
    CHECK(fertility_number(Word{2, 2, 1, 2}) == 6);
    CHECK(fertility_number(Word{3, 2, 2, 1, 2}) == 7);
    CHECK(fertility_number(Word{2, 1, 2}) == 5);
    CHECK(fertility_number(Word{2, 1, 1, 2}) == 5);
    CHECK(fertility_number(classify(Word{2, 2, 1, 2})) == 6);
    CHECK_THROWS_AS(fertility_number(unknot_class()), UndefinedError);
    CHECK_THROWS_AS(fertility_number(unlink_class()), UndefinedError);
    CHECK_THROWS_AS(fertility_number(Word{1}), UndefinedError);
}

TEST_CASE("the fertile classes up to seven crossings") {
    const std::set<std::pair<long long, long long>> fertile_knots = {
        {3, 1}, {5, 2}, {7, 2}, {11, 3}, {13, 5}, {19, 7}};
    for (const LinkClass& c : generate_rational_classes(7, 1))
        CHECK(is_fertile(c) == (fertile_knots.count({c.p, c.q_amphi}) == 1));

    const std::set<std::pair<long long, long long>> fertile_links = {
        {2, 1}, {4, 1}, {8, 3}, {12, 5}, {10, 3}, {18, 5}};
    for (const LinkClass& c : generate_rational_classes(7, 2))
        CHECK(is_fertile(c) == (fertile_links.count({c.p, c.q_amphi}) == 1));

    CHECK(is_fertile(Word{2}));
    CHECK(is_fertile(Word{2, 2, 1, 2}));
    CHECK_FALSE(is_fertile(Word{2, 1, 1, 1, 2}));
    CHECK_THROWS_AS(is_fertile(unknot_class()), UndefinedError);
}

TEST_CASE("no class of eight or more crossings is fertile") {
    for (int comp : {1, 2})
        for (const LinkClass& c : generate_rational_classes(10, comp)) {
            if (c.crossing < 8) continue;
            CHECK_FALSE(is_fertile(c));
        }
    // Two 8-crossing links reach every rational link target below them but
    // are infertile anyway: non-rational targets exist from 8 crossings on.
    CHECK_FALSE(is_fertile(Word{2, 1, 1, 1, 1, 2}));
    CHECK_FALSE(is_fertile(Word{2, 2, 1, 3}));
}

TEST_CASE("rational fertility numbers") {
    CHECK(rational_fertility_number(Word{3}) == 3);
    CHECK(rational_fertility_number(Word{2, 2, 2, 2, 1, 2}) == 8);
    CHECK(rational_fertility_number(Word{2}, 6) == 2);
    // The default cap only raises what the rationality cap cut off.
    CHECK(rational_fertility_number(Word{2, 2, 1, 2}, 12) >=
          fertility_number(Word{2, 2, 1, 2}));
    CHECK_THROWS_AS(rational_fertility_number(Word{3}, 1), DomainError);
    CHECK_THROWS_AS(rational_fertility_number(Word{3}, 17), DomainError);
}

TEST_CASE("fertility is monotone under even growth of any one entry") {
    for (long long c = 2; c <= 8; ++c)
        for (const Word& w : canonical_words(c)) {
            int base = fertility_number(w);
            for (std::size_t i = 0; i < w.size(); ++i) {
                Word grown = w;
                grown[i] += 2;
                CHECK(fertility_number(grown) >= base);
            }
        }
}

TEST_CASE("trunk words") {
    CHECK(trunk_words(1) == std::vector<Word>{{2}, {3}});
    CHECK(trunk_words(2) == std::vector<Word>{{2, 2}, {3, 2}, {3, 3}});
    CHECK(trunk_words(3) ==
          std::vector<Word>{{2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {3, 1, 3}, {3, 2, 3}});
    CHECK(trunk_words(4) ==
          std::vector<Word>{{2, 1, 1, 2}, {2, 2, 1, 2}, {2, 2, 2, 2},
                            {3, 1, 1, 2}, {3, 1, 2, 2}, {3, 2, 1, 2}, {3, 2, 2, 2},
                            {3, 1, 1, 3}, {3, 2, 1, 3}, {3, 2, 2, 3}});
    CHECK(trunk_words(5).size() == 20);
    CHECK(trunk_words(6).size() == 36);
    for (int len = 1; len <= 8; ++len) {
        auto words = trunk_words(len);
        CHECK(static_cast<long long>(words.size()) <= 3ll << (len - 1));
        // One representative per reversal pair: a non-palindromic member's
        // reversal never also appears.
        std::set<Word> set(words.begin(), words.end());
        for (const Word& w : words) {
            if (w == reverse_word(w)) continue;
            CHECK(set.count(reverse_word(w)) == 0);
        }
    }
    CHECK_THROWS_AS(trunk_words(0), DomainError);
}

TEST_CASE("minimum trunk fertility") {
    CHECK(min_trunk_fertility(1, 1) == 3);
    CHECK(min_trunk_fertility(1, 2) == 2);
    CHECK(min_trunk_fertility(4, 1) == 5);
    CHECK(min_trunk_fertility(5, 1) == 5);
    CHECK(min_trunk_fertility(5, 2) == 6);
}

TEST_CASE("branch decomposition") {
    BranchDecomposition d = branch_decompose({5, 2});
    CHECK(d.trunk == Word{3, 2});
    CHECK(d.offsets == std::vector<long long>{1, 0});

    BranchDecomposition e = branch_decompose({2, 4});
    CHECK(e.trunk == Word{2, 2});
    CHECK(e.offsets == std::vector<long long>{0, 1});

    BranchDecomposition f = branch_decompose({3, 3, 1, 3});
    CHECK(f.trunk == Word{3, 1, 1, 3});
    CHECK(f.offsets == std::vector<long long>{0, 1, 0, 0});

    // Round trip: trunk + 2*offsets reproduces the word.
    for (const Word& w : {Word{4, 1, 2, 3}, Word{2, 5, 2}, Word{6}}) {
        BranchDecomposition b = branch_decompose(w);
        REQUIRE(b.trunk.size() == w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK(b.trunk[i] + 2 * b.offsets[i] == w[i]);
    }

    CHECK_THROWS_AS(branch_decompose({1, 2}), NonCanonicalWordError);
    CHECK_THROWS_AS(branch_decompose({2, 0, 2}), NonCanonicalWordError);
    CHECK_THROWS_AS(branch_decompose({}), NonCanonicalWordError);
}

TEST_CASE("local fertility thresholds") {
    ThresholdReport links6 = verify_local_fertility_threshold(2, 6);
    CHECK(links6.required == 6);
    CHECK(links6.items.size() == 12);
    CHECK(links6.all_pass);

    ThresholdReport knots4 = verify_local_fertility_threshold(1, 4);
    CHECK(knots4.required == 7);
    CHECK_FALSE(knots4.all_pass);
    bool found_ladder = false;
    for (const ThresholdItem& item : knots4.items)
        if (item.word == Word{2, 1, 1, 2}) {
            found_ladder = true;
            CHECK(item.fertility == 5);
            CHECK_FALSE(item.pass);
        }
    CHECK(found_ladder);
}

TEST_CASE("every two-component canonical word of length >= 4 up to 12 crossings tops out") {
    for (long long c = 7; c <= 12; ++c)
        for (const Word& w : canonical_words(c)) {
            if (w.size() < 4) continue;
            if (classify(w).components != 2) continue;
            CHECK(fertility_number(w) == 6);
        }
}

TEST_CASE("every knot canonical word of length >= 8 up to 14 crossings tops out") {
    for (long long c = 10; c <= 14; ++c)
        for (const Word& w : canonical_words(c)) {
            if (w.size() < 8) continue;
            if (classify(w).components != 1) continue;
            CHECK(fertility_number(w) == 7);
        }
}
