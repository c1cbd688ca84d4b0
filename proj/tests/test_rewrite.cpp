// test_rewrite.cpp -- untangling rewrites and full normalization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratlink/errors.hpp"
#include "ratlink/fraction.hpp"
#include "ratlink/link_class.hpp"
#include "ratlink/rewrite.hpp"

#include <cstdlib>
#include <random>

using namespace ratlink;

TEST_CASE("untangle_step on opposite signs") {
    CHECK(untangle_step({2, -2}, 0) == Word{1, 1, 1});
    CHECK(cf_eval({2, -2}) == cf_eval({1, 1, 1}));

    CHECK(untangle_step({3, -1, 2}, 0) == Word{2, 1, 0, -2});
    CHECK(cf_eval({3, -1, 2}) == cf_eval({2, 1, 0, -2}));

    CHECK(untangle_step({-3, 2}, 0) == Word{-2, -1, -1});
    CHECK(cf_eval({-3, 2}) == cf_eval({-2, -1, -1}));

    // The move drops the twist total by exactly one.
    CHECK(twist_total(untangle_step({4, -3, 5, -1}, 1)) == 12);
    CHECK(cf_eval(untangle_step({4, -3, 5, -1}, 1)) == cf_eval({4, -3, 5, -1}));
}

TEST_CASE("untangle_step through a zero successor") {
    CHECK(untangle_step({2, 0, 3}, 0) == Word{5});
    CHECK(untangle_step({1, 4, 0, -2, 5}, 1) == Word{1, 2, 5});
    CHECK(cf_eval({1, 4, 0, -2, 5}) == cf_eval({1, 2, 5}));
}

TEST_CASE("untangle_step domain errors") {
    CHECK_THROWS_AS(untangle_step({2, 0}, 0), DomainError);   // trailing zero
    CHECK_THROWS_AS(untangle_step({5}, 0), DomainError);      // no successor
    CHECK_THROWS_AS(untangle_step({2, 2}, 0), SignsAgreeError);
    CHECK_THROWS_AS(untangle_step({-2, -3}, 0), SignsAgreeError);
    CHECK_THROWS_AS(untangle_step({0, 3}, 0), SignsAgreeError); // w[i] == 0
}

TEST_CASE("normalize leaves terminal words alone") {
    CHECK(normalize({1}).trace.size() == 1);
    CHECK(normalize({2, 2, 1, 2}).trace.size() == 1);
    CHECK(normalize({2, 2, 1, 2}).link.p == 19);
    CHECK(normalize({-3, -2}).trace.size() == 1);
    CHECK(normalize({0, 2, 3}).trace.size() == 1);  // denominator-closure form
    CHECK(normalize({2, 0}).trace.size() == 1);     // infinity form
    CHECK(normalize({2, 0}).link == unknot_class());
}

TEST_CASE("normalize reaches the class of the fraction") {
    NormalizeResult r = normalize({3, 1, -1, 2}); // cf == 2/1, the Hopf link
    CHECK(r.link == classify(Fraction{2, 1}));
    for (const Word& step : r.trace) CHECK(cf_eval(step) == Fraction{2, 1});

    NormalizeResult s = normalize({2, -3, 2}); // cf == 8/5, mirror of 8/3
    CHECK(cf_eval({2, -3, 2}) == Fraction{8, 5});
    CHECK(s.link.p == 8);
    CHECK(s.link.q_chiral == 5);
    CHECK(amphi_key(s.link) == amphi_key(classify(Word{2, 1, 2})));
    CHECK(chiral_key(s.link) != chiral_key(classify(Word{2, 1, 2})));

    NormalizeResult t = normalize({4, 0, -4}); // interior zero cancels all
    CHECK(t.link == unlink_class());
    CHECK(t.trace.size() == 2);
    CHECK(t.trace.back() == Word{0});
}

TEST_CASE("normalize rejects the empty word") {
    CHECK_THROWS_AS(normalize({}), DomainError);
}

TEST_CASE("normalize respects the step budget on alternating words") {
    Word nasty = {2, -2, 2, -2, 2, -2};
    NormalizeResult r = normalize(nasty);
    CHECK(static_cast<long long>(r.trace.size()) - 1 <=
          twist_total(nasty) + static_cast<long long>(nasty.size()));
    CHECK(r.link == classify(cf_eval(nasty)));
}

TEST_CASE("random words: cf invariant, class match, step budget") {
    std::mt19937_64 rng(0x5eedULL);
    for (int trial = 0; trial < 2000; ++trial) {
        Word w(1 + rng() % 5);
        for (long long& a : w) a = static_cast<long long>(rng() % 11) - 5;
        Fraction f0;
        try {
            f0 = cf_eval(w);
        } catch (const DomainError&) {
            continue; // 0/0 words have no class
        }
        NormalizeResult r = normalize(w);
        for (const Word& step : r.trace) CHECK(cf_eval(step) == f0);
        CHECK(r.link == classify(f0));
        CHECK(static_cast<long long>(r.trace.size()) - 1 <=
              twist_total(w) + static_cast<long long>(w.size()));
    }
}
