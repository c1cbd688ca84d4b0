// test_fraction.cpp -- exact projective rationals, words, parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ratlink/errors.hpp"
#include "ratlink/fraction.hpp"
#include "ratlink/word.hpp"

#include <limits>

using namespace ratlink;

TEST_CASE("normalized reduces to gcd 1 with nonnegative denominator") {
    CHECK(normalized(7, 2) == Fraction{7, 2});
    CHECK(normalized(2, -4) == Fraction{-1, 2});
    CHECK(normalized(-6, -4) == Fraction{3, 2});
    CHECK(normalized(0, -7) == Fraction{0, 1});
    CHECK(normalized(-3, 0) == Fraction{1, 0});
    CHECK(normalized(5, 0) == Fraction{1, 0});
    CHECK(normalized(8, 6) == Fraction{4, 3});
    CHECK_THROWS_AS(normalized(0, 0), DomainError);
}

TEST_CASE("infinity predicate") {
    CHECK(normalized(3, 0).is_infinity());
    CHECK_FALSE(normalized(0, 3).is_infinity());
}

TEST_CASE("cf_eval matches hand-computed values") {
    CHECK(cf_eval({3, 2}) == Fraction{7, 2});
    CHECK(cf_eval({2, 1, 2}) == Fraction{8, 3});
    CHECK(cf_eval({5}) == Fraction{5, 1});
    CHECK(cf_eval({1, 1, 1}) == Fraction{3, 2});
    CHECK(cf_eval({-3, -2}) == Fraction{-7, 2});
    CHECK(cf_eval({2, -2}) == Fraction{3, 2});
    CHECK(cf_eval({0}) == Fraction{0, 1});
    CHECK(cf_eval({4, 0, -4}) == Fraction{0, 1});
}

TEST_CASE("cf_eval handles zeros and intermediate infinities projectively") {
    // A zero conducts its neighbours into one region: [2 0 3] == [5].
    CHECK(cf_eval({2, 0, 3}) == cf_eval({5}));
    CHECK(cf_eval({3, 0}) == Fraction{1, 0});
    CHECK(cf_eval({0, 0}) == Fraction{1, 0});
    CHECK(cf_eval({0, 2, 3}) == Fraction{3, 7});
    CHECK(cf_eval({0, 1, 0}) == Fraction{0, 1});
}

TEST_CASE("cf_eval rejects the empty word and 64-bit overflow") {
    CHECK_THROWS_AS(cf_eval({}), DomainError);
    const long long big = 3037000500LL; // big*big just exceeds 2^63 - 1
    CHECK_THROWS_AS(cf_eval({big, big, big}), OverflowError);
}

TEST_CASE("fraction formatting and parsing round-trip") {
    CHECK(format_fraction(Fraction{7, 2}) == "7/2");
    CHECK(format_fraction(Fraction{-7, 2}) == "-7/2");
    CHECK(format_fraction(Fraction{1, 0}) == "1/0");
    CHECK(format_fraction(Fraction{0, 1}) == "0/1");

    CHECK(parse_fraction("7/2") == Fraction{7, 2});
    CHECK(parse_fraction("-7/2") == Fraction{-7, 2});
    CHECK(parse_fraction("10") == Fraction{10, 1});
    CHECK(parse_fraction("1/0") == Fraction{1, 0});
    CHECK(parse_fraction("6/4") == Fraction{3, 2});
    CHECK_THROWS_AS(parse_fraction("0/0"), DomainError);
    CHECK_THROWS_AS(parse_fraction("abc"), DomainError);
    CHECK_THROWS_AS(parse_fraction("7/2x"), DomainError);
    CHECK_THROWS_AS(parse_fraction(""), DomainError);
    CHECK_THROWS_AS(parse_fraction("99999999999999999999"), OverflowError);
}

TEST_CASE("word parsing accepts spaces, commas, and signs") {
    CHECK(parse_word("3 2") == Word{3, 2});
    CHECK(parse_word("2,-1,2") == Word{2, -1, 2});
    CHECK(parse_word("  3   2 ") == Word{3, 2});
    CHECK(parse_word("+4") == Word{4});
    CHECK(parse_word("0") == Word{0});
    CHECK_THROWS_AS(parse_word(""), DomainError);
    CHECK_THROWS_AS(parse_word("3 x"), DomainError);
    CHECK_THROWS_AS(parse_word("99999999999999999999"), OverflowError);
}

TEST_CASE("word helpers") {
    CHECK(format_word({3, 1, 2}) == "3 1 2");
    CHECK(reverse_word({3, 1, 2}) == Word{2, 1, 3});
    CHECK(reverse_word({}) == Word{});
    CHECK(twist_total({2, -3, 0, 4}) == 9);
    CHECK(twist_total({}) == 0);
}
