// fraction.cpp -- exact projective rational arithmetic.
#include "ratlink/fraction.hpp"

#include "ratlink/errors.hpp"

#include <cstdlib>
#include <numeric>

namespace ratlink {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("continued fraction value exceeds 64 bits");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("continued fraction value exceeds 64 bits");
    return r;
}

} // namespace

Fraction normalized(long long num, long long den) {
    if (num == 0 && den == 0) throw DomainError("0/0 is not a projective rational");
    long long g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0) num = 1; // projective infinity has no sign
    return Fraction{num, den};
}

Fraction cf_eval(const Word& w) {
    if (w.empty()) throw DomainError("cannot evaluate an empty word");
    // Right-to-left: (p, q) starts at (an, 1); consecutive continuants stay
    // coprime throughout, so normalization only fixes signs at the end.
    long long p = w.back();
    long long q = 1;
    for (auto it = w.rbegin() + 1; it != w.rend(); ++it) {
        long long next = checked_add(checked_mul(*it, p), q);
        q = p;
        p = next;
    }
    return normalized(p, q);
}

std::string format_fraction(const Fraction& f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

Fraction parse_fraction(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            long long num = std::stoll(text, &used);
            if (used != text.size()) throw DomainError("bad fraction '" + text + "'");
            return normalized(num, 1);
        }
        std::size_t used_num = 0, used_den = 0;
        long long num = std::stoll(text.substr(0, slash), &used_num);
        std::string den_part = text.substr(slash + 1);
        long long den = std::stoll(den_part, &used_den);
        if (used_num != slash || used_den != den_part.size())
            throw DomainError("bad fraction '" + text + "'");
        return normalized(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad fraction '" + text + "'");
    } catch (const std::out_of_range&) {
        throw OverflowError("fraction does not fit in 64 bits");
    }
}

} // namespace ratlink
