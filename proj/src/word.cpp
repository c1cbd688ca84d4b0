// word.cpp -- twist word helpers.
#include "ratlink/word.hpp"

#include "ratlink/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace ratlink {

Word reverse_word(const Word& w) {
    return Word(w.rbegin(), w.rend());
}

long long twist_total(const Word& w) {
    long long s = 0;
    for (long long a : w) s += std::llabs(a);
    return s;
}

Word parse_word(const std::string& text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (text[i] == '+' || text[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++digits;
        }
        if (digits == 0)
            throw DomainError("bad twist word entry near '" + text.substr(start) + "'");
        try {
            w.push_back(std::stoll(text.substr(start, i - start)));
        } catch (const std::out_of_range&) {
            throw OverflowError("twist word entry does not fit in 64 bits");
        }
    }
    if (w.empty()) throw DomainError("empty twist word");
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace ratlink
