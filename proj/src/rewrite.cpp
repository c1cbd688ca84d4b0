// rewrite.cpp -- untangling rewrites on sign-assigned words.
#include "ratlink/rewrite.hpp"

#include "ratlink/errors.hpp"

#include <cstdlib>

namespace ratlink {

Word untangle_step(const Word& w, std::size_t i) {
    if (i + 1 >= w.size()) throw DomainError("untangle position needs a successor");
    long long a = w[i], b = w[i + 1];
    if (b == 0) {
        // [.., a, 0, c, t..] -> [.., a + c, t..]; the zero conducts the two
        // neighbours into one twist region.
        if (i + 2 >= w.size())
            throw DomainError("trailing zero is dropped with its predecessor, not merged");
        Word out(w.begin(), w.begin() + i);
        out.push_back(a + w[i + 2]);
        out.insert(out.end(), w.begin() + i + 3, w.end());
        return out;
    }
    if (a == 0 || (a > 0) == (b > 0))
        throw SignsAgreeError("untangle step needs opposite signs at the chosen position");
    long long s = a > 0 ? 1 : -1;
    Word out(w.begin(), w.begin() + i);
    out.push_back(s * (std::llabs(a) - 1));
    out.push_back(s);
    out.push_back(s * (std::llabs(b) - 1));
    for (std::size_t j = i + 2; j < w.size(); ++j) out.push_back(-w[j]);
    return out;
}

namespace {

// Leading zeros are legal in terminal words (denominator-closure forms), so
// sign scans start past one.
std::size_t scan_start(const Word& w) { return w.front() == 0 ? 1 : 0; }

bool is_terminal(const Word& w) {
    if (w.size() == 1) return true;
    if (w.size() == 2 && w[1] == 0) return true; // infinity form [x 0]
    int sign = 0;
    for (std::size_t j = scan_start(w); j < w.size(); ++j) {
        if (w[j] == 0) return false;
        int s = w[j] > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

} // namespace

NormalizeResult normalize(const Word& w) {
    if (w.empty()) throw DomainError("cannot normalize an empty word");
    NormalizeResult res;
    res.trace.push_back(w);
    const long long budget = twist_total(w) + static_cast<long long>(w.size());
    long long steps = 0;
    for (;;) {
        const Word& cur = res.trace.back();
        Word next;
        if (cur.size() >= 3 && cur.back() == 0) {
            // N[.. y x 0] == N[.. y]: the final twist region is absorbed.
            next.assign(cur.begin(), cur.end() - 2);
        } else {
            std::size_t k = 1; // leftmost interior zero, if any
            while (k + 1 < cur.size() && cur[k] != 0) ++k;
            if (k + 1 < cur.size()) {
                // Interior zero: [.., a, 0, b, ..] -> [.., a+b, ..].
                next.assign(cur.begin(), cur.begin() + (k - 1));
                next.push_back(cur[k - 1] + cur[k + 1]);
                next.insert(next.end(), cur.begin() + k + 2, cur.end());
            } else if (is_terminal(cur)) {
                break;
            } else {
                // All entries past a possible leading zero are nonzero here,
                // and signs are mixed, so a disagreement exists.
                std::size_t j = scan_start(cur);
                while ((cur[j] > 0) == (cur[j + 1] > 0)) ++j;
                next = untangle_step(cur, j);
            }
        }
        res.trace.push_back(std::move(next));
        if (++steps > budget)
            throw Error("internal: normalize exceeded its step budget");
    }
    res.link = classify(res.trace.back());
    return res;
}

} // namespace ratlink
