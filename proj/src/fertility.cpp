// fertility.cpp -- fertility numbers and trunk machinery.
#include "ratlink/fertility.hpp"

#include "ratlink/errors.hpp"
#include "ratlink/resultants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ratlink {

namespace {

// Enumerate canonical words (first/last >= 2, interior >= 1) with the given
// crossing sum.
void canonical_words_with_sum(long long sum, const std::function<void(const Word&)>& fn) {
    Word w;
    auto rec = [&](auto&& self, long long remaining) -> void {
        if (remaining >= 2) {
            w.push_back(remaining); // close the word here
            fn(w);
            w.pop_back();
        }
        long long lo = w.empty() ? 2 : 1;
        for (long long a = lo; a + 2 <= remaining; ++a) {
            w.push_back(a);
            self(self, remaining - a);
            w.pop_back();
        }
    };
    rec(rec, sum);
}

const std::vector<LinkClass>& cached_rational_classes(long long max_crossing, int components) {
    static std::map<std::pair<long long, int>, std::vector<LinkClass>> cache;
    auto key = std::make_pair(max_crossing, components);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::map<ClassKey, LinkClass> classes;
    for (long long c = 2; c <= max_crossing; ++c)
        canonical_words_with_sum(c, [&](const Word& w) {
            LinkClass cls = classify(w);
            if (cls.components == components) classes.emplace(amphi_key(cls), cls);
        });
    std::vector<LinkClass> out;
    out.reserve(classes.size());
    for (auto& [key2, cls] : classes) out.push_back(cls);
    return cache.emplace(key, std::move(out)).first->second;
}

std::set<ClassKey> reached_classes(const LinkClass& cls) {
    std::set<ClassKey> reached;
    for (const LinkClass& r : resultant_set(Shadow(canonical_word(cls)), false))
        reached.insert(amphi_key(r));
    return reached;
}

// Walk the targets' crossing levels in increasing order; return the last
// level whose classes are all reached, or the floor if even the first fails.
int reach_level(const LinkClass& cls, const std::vector<LinkClass>& targets) {
    const int floor_level = cls.components == 1 ? 2 : 1;
    if (targets.empty()) return floor_level;

    const std::set<ClassKey> reached = reached_classes(cls);
    int best = floor_level;
    std::size_t i = 0;
    while (i < targets.size()) {
        long long level = targets[i].crossing;
        bool all = true;
        for (; i < targets.size() && targets[i].crossing == level; ++i)
            if (!reached.count(amphi_key(targets[i]))) all = false;
        if (!all) break;
        best = static_cast<int>(level);
    }
    return best;
}

void require_nontrivial(const LinkClass& cls) {
    if (cls.p < 2) throw UndefinedError("fertility is undefined for the unknot/unlink");
}

} // namespace

std::vector<LinkClass> generate_rational_classes(long long max_crossing, int components) {
    if (max_crossing < 2 || max_crossing > 16)
        throw DomainError("class generation supported for max crossing 2..16");
    if (components != 1 && components != 2)
        throw DomainError("component count must be 1 or 2");
    return cached_rational_classes(max_crossing, components);
}

int fertility_number(const LinkClass& cls) {
    require_nontrivial(cls);
    const long long cap = cls.components == 1 ? 7 : 6;
    return reach_level(cls, cached_rational_classes(cap, cls.components));
}

int fertility_number(const Word& w) { return fertility_number(classify(w)); }

bool is_fertile(const LinkClass& cls) {
    require_nontrivial(cls);
    // Past 8-crossing knots / 7-crossing links, smaller prime non-rational
    // classes exist and can never arise from a rational shadow.
    if (cls.crossing > (cls.components == 1 ? 8 : 7)) return false;
    if (cls.crossing < 3) return true; // nothing nontrivial below
    const std::set<ClassKey> reached = reached_classes(cls);
    for (const LinkClass& t : cached_rational_classes(cls.crossing - 1, cls.components))
        if (!reached.count(amphi_key(t))) return false;
    return true;
}

bool is_fertile(const Word& w) { return is_fertile(classify(w)); }

int rational_fertility_number(const LinkClass& cls, long long max_crossing) {
    require_nontrivial(cls);
    if (max_crossing < 2 || max_crossing > 16)
        throw DomainError("rational fertility supported for max crossing 2..16");
    return reach_level(cls, cached_rational_classes(max_crossing, cls.components));
}

int rational_fertility_number(const Word& w, long long max_crossing) {
    return rational_fertility_number(classify(w), max_crossing);
}

std::vector<Word> trunk_words(int length) {
    if (length < 1) throw DomainError("trunk length must be >= 1");
    if (length == 1) return {Word{2}, Word{3}};

    static const std::vector<std::pair<long long, long long>> kEnds = {
        {2, 2}, {3, 2}, {3, 3}};
    std::vector<Word> out;
    for (auto [first, last] : kEnds) {
        Word w(static_cast<std::size_t>(length), 1);
        w.front() = first;
        w.back() = last;
        // Odometer over interior entries in {1, 2}, rightmost fastest.
        for (;;) {
            // Reversal pairs only occur between words with equal ends; keep
            // the lexicographically larger of the pair.
            if (!(first == last && w < reverse_word(w))) out.push_back(w);
            int i = length - 2;
            while (i >= 1 && w[static_cast<std::size_t>(i)] == 2)
                w[static_cast<std::size_t>(i--)] = 1;
            if (i < 1) break;
            w[static_cast<std::size_t>(i)] = 2;
        }
    }
    return out;
}

int min_trunk_fertility(int length, int components) {
    int best = 0;
    bool found = false;
    for (const Word& w : trunk_words(length)) {
        LinkClass cls = classify(w);
        if (cls.components != components) continue;
        int f = fertility_number(cls);
        if (!found || f < best) best = f;
        found = true;
    }
    if (!found) throw UndefinedError("trunk has no member with that component count");
    return best;
}

BranchDecomposition branch_decompose(const Word& w) {
    if (w.empty() || w.front() < 2 || w.back() < 2)
        throw NonCanonicalWordError("branch decomposition needs a canonical word");
    for (long long a : w)
        if (a < 1) throw NonCanonicalWordError("branch decomposition needs a canonical word");
    BranchDecomposition out;
    out.trunk.reserve(w.size());
    out.offsets.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const bool end = i == 0 || i + 1 == w.size();
        const bool odd = w[i] % 2 != 0;
        long long parent = end ? (odd ? 3 : 2) : (odd ? 1 : 2);
        out.trunk.push_back(parent);
        out.offsets.push_back((w[i] - parent) / 2);
    }
    return out;
}

ThresholdReport verify_local_fertility_threshold(int components, int n) {
    if (n < 3) throw DomainError("threshold check needs n >= 3");
    ThresholdReport rep;
    rep.components = components;
    rep.n = n;
    rep.required = components == 1 ? 7 : 6;

    std::vector<Word> words;
    for (int len : {n - 1, n - 2})
        for (const Word& w : trunk_words(len)) words.push_back(w);
    Word ladder(static_cast<std::size_t>(n), 1);
    ladder.front() = ladder.back() = 2;
    words.push_back(ladder);

    rep.all_pass = true;
    for (const Word& w : words) {
        LinkClass cls = classify(w);
        if (cls.components != components) continue;
        ThresholdItem item;
        item.word = w;
        item.fertility = fertility_number(cls);
        item.pass = item.fertility >= rep.required;
        if (!item.pass) rep.all_pass = false;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

} // namespace ratlink
