// verify.cpp -- the built-in verification suite.
#include "ratlink/verify.hpp"

#include "ratlink/catalog.hpp"
#include "ratlink/counting.hpp"
#include "ratlink/errors.hpp"
#include "ratlink/families.hpp"
#include "ratlink/fertility.hpp"
#include "ratlink/fraction.hpp"
#include "ratlink/resultants.hpp"
#include "ratlink/rewrite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace ratlink {

namespace {

std::set<ClassKey> amphi_set(const Shadow& s) {
    std::set<ClassKey> out;
    for (const LinkClass& c : resultant_set(s, false)) out.insert(amphi_key(c));
    return out;
}

bool subset_of(const std::set<ClassKey>& small, const std::set<ClassKey>& big) {
    for (const ClassKey& k : small)
        if (!big.count(k)) return false;
    return true;
}

// Fixed-count failure collector so detail strings stay readable.
struct FailLog {
    std::ostringstream out;
    int failures = 0;

    template <typename Fn>
    void check(bool ok, Fn&& describe) {
        if (ok) return;
        if (failures < 5) {
            if (failures) out << "; ";
            describe(out);
        }
        ++failures;
    }
    bool pass() const { return failures == 0; }
    std::string detail(const std::string& clean) const {
        if (!failures) return clean;
        std::ostringstream full;
        full << failures << " failure(s): " << out.str();
        return full.str();
    }
};

CriterionResult catalog_fertility_criterion() {
    CriterionResult r{1, "catalog fertility numbers match recomputation", false, ""};
    FailLog log;
    int checked = 0;
    for (const CatalogEntry& e : builtin_catalog().entries) {
        if (!e.fertility) continue;
        ++checked;
        int got = fertility_number(e.cls);
        log.check(got == *e.fertility, [&](std::ostream& o) {
            o << e.name << " [" << format_word(e.word) << "] stored " << *e.fertility
              << " computed " << got;
        });
    }
    std::ostringstream clean;
    clean << checked << " entries checked";
    r.pass = log.pass();
    r.detail = log.detail(clean.str());
    return r;
}

CriterionResult family_stability_criterion() {
    CriterionResult r{2, "family fertility constant under even twist growth", false, ""};
    FailLog log;
    int rows = 0, stated_mismatch = 0;
    for (const FamilyRow& row : builtin_families()) {
        ++rows;
        FamilyStability st = check_family_stability(row);
        log.check(st.constant, [&](std::ostream& o) {
            o << "table " << row.table_id << " '" << row.pattern() << "' probes";
            for (int f : st.fertilities) o << ' ' << f;
        });
        if (st.constant && st.fertility != row.stated_fertility) ++stated_mismatch;
    }
    std::ostringstream clean;
    clean << rows << " rows probed";
    if (stated_mismatch) clean << ", " << stated_mismatch << " stated-value mismatch(es)";
    r.pass = log.pass();
    r.detail = log.detail(clean.str());
    return r;
}

unsigned long long amphi_count_for_p(const Shadow& s, long long p) {
    for (const DistributionCell& cell : resultant_distribution(s).amphichiral())
        if (cell.link.p == p) return cell.count;
    return 0;
}

CriterionResult point_values_criterion() {
    CriterionResult r{3, "distribution point values and the distinct-set bound", false, ""};
    FailLog log;

    auto cells2 = resultant_distribution(Shadow({2})).amphichiral();
    log.check(cells2.size() == 2 && cells2[0].link == unlink_class() &&
                  cells2[0].count == 2 && cells2[1].link.p == 2 && cells2[1].count == 2,
              [&](std::ostream& o) { o << "[2] distribution off"; });

    struct { long long n, unlink, four; } torus_rows[] = {{10, 252, 240}, {12, 924, 990}};
    for (auto [n, unlink, four] : torus_rows) {
        Shadow s({n});
        unsigned long long got0 = amphi_count_for_p(s, 0);
        unsigned long long got4 = amphi_count_for_p(s, 4);
        log.check(got0 == static_cast<unsigned long long>(unlink) &&
                      got4 == static_cast<unsigned long long>(four),
                  [&](std::ostream& o) {
                      o << "[" << n << "] unlink " << got0 << " (want " << unlink
                        << "), 4-crossing " << got4 << " (want " << four << ")";
                  });
    }

    Shadow ladder({2, 2, 2, 2});
    auto distinct = resultant_set(ladder, false).size();
    log.check(distinct == 11,
              [&](std::ostream& o) { o << "[2 2 2 2] distinct " << distinct << " want 11"; });
    auto bound = max_unique_resultants(ladder);
    log.check(bound == 54,
              [&](std::ostream& o) { o << "[2 2 2 2] bound " << bound << " want 54"; });
    auto halfsigned = distinct_halfsigned_count(ladder);
    log.check(static_cast<unsigned long long>(halfsigned) <= bound,
              [&](std::ostream& o) { o << "half-signed " << halfsigned << " > bound"; });

    r.pass = log.pass();
    r.detail = log.detail("5 point checks");
    return r;
}

CriterionResult deep_reach_criterion() {
    CriterionResult r{4, "four 11-crossing words reach every rational knot through 8 crossings",
                      false, ""};
    const Word words[] = {{2, 2, 1, 1, 1, 1, 1, 2},
                          {2, 1, 1, 2, 1, 1, 1, 2},
                          {2, 2, 2, 1, 1, 1, 2},
                          {2, 2, 2, 2, 1, 2}};
    FailLog log;
    for (const Word& w : words) {
        int frn = rational_fertility_number(w, 12);
        log.check(frn == 8, [&](std::ostream& o) {
            o << "[" << format_word(w) << "] reach " << frn << " want 8";
        });
    }
    r.pass = log.pass();
    r.detail = log.detail("4 words checked");
    return r;
}

bool same_distribution(const Distribution& a, const Distribution& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        if (a.cells[i].link != b.cells[i].link || a.cells[i].count != b.cells[i].count)
            return false;
    return true;
}

CriterionResult brute_force_criterion() {
    CriterionResult r{5, "assignment enumeration matches per-crossing brute force", false, ""};
    FailLog log;
    int checked = 0;

    for (const CatalogEntry& e : builtin_catalog().entries) {
        if (e.crossing > 12) continue;
        ++checked;
        Shadow s(e.word);
        log.check(same_distribution(resultant_distribution(s), brute_force_distribution(s)),
                  [&](std::ostream& o) { o << "catalog [" << format_word(e.word) << "]"; });
    }

    std::mt19937_64 rng(0x2bda6eULL);
    for (int t = 0; t < 200; ++t) {
        int len = 1 + static_cast<int>(rng() % 5);
        long long budget = 14;
        Word w;
        for (int i = 0; i < len; ++i) {
            long long slots_after = len - 1 - i;
            long long hi = std::min<long long>(5, budget - slots_after);
            long long a = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(hi));
            w.push_back(a);
            budget -= a;
        }
        ++checked;
        Shadow s(w);
        log.check(same_distribution(resultant_distribution(s), brute_force_distribution(s)),
                  [&](std::ostream& o) { o << "random [" << format_word(w) << "]"; });
    }

    std::ostringstream clean;
    clean << checked << " shadows compared";
    r.pass = log.pass();
    r.detail = log.detail(clean.str());
    return r;
}

CriterionResult random_normalize_criterion() {
    CriterionResult r{6, "random words: rewrites preserve the fraction within the step budget",
                      false, ""};
    FailLog log;
    std::mt19937_64 rng(0x0ddba11ULL);
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        int len = 1 + static_cast<int>(rng() % 6);
        Word w;
        for (int i = 0; i < len; ++i)
            w.push_back(static_cast<long long>(rng() % 13) - 6);
        Fraction f0 = cf_eval(w);
        NormalizeResult res = normalize(w);
        bool invariant = true;
        for (const Word& step : res.trace)
            if (!(cf_eval(step) == f0)) invariant = false;
        bool classed = res.link == classify(f0);
        bool budget = res.trace.size() - 1 <=
                      static_cast<std::size_t>(twist_total(w)) + w.size();
        log.check(invariant && classed && budget, [&](std::ostream& o) {
            o << "[" << format_word(w) << "]" << (invariant ? "" : " cf drift")
              << (classed ? "" : " class mismatch") << (budget ? "" : " budget blown");
        });
    }
    std::ostringstream clean;
    clean << trials << " words normalized";
    r.pass = log.pass();
    r.detail = log.detail(clean.str());
    return r;
}

CriterionResult codim_bounds_criterion() {
    CriterionResult r{7, "codimension counts and growth monotonicity respect the bounds",
                      false, ""};
    FailLog log;
    int words = 0;

    for (int components : {1, 2}) {
        for (const LinkClass& cls : generate_rational_classes(14, components)) {
            if (cls.crossing < 4) continue;
            ++words;
            Word w = canonical_word(cls);
            long long d = static_cast<long long>(w.size());
            long long c = cls.crossing;
            log.check(d <= c - 2, [&](std::ostream& o) {
                o << "[" << format_word(w) << "] length " << d << " > " << c - 2;
            });
            Shadow s(w);
            long long n0 = codim_resultant_count(s, 0);
            log.check(n0 == 1, [&](std::ostream& o) {
                o << "[" << format_word(w) << "] codim-0 " << n0;
            });
            long long n1 = codim_resultant_count(s, 1);
            bool palindrome = w == reverse_word(w);
            long long cap1 = palindrome ? d / 2 : d - 1;
            log.check(n1 <= cap1, [&](std::ostream& o) {
                o << "[" << format_word(w) << "] codim-1 " << n1 << " > " << cap1;
            });
            for (long long k : {2LL, 3LL}) {
                long long nk = codim_resultant_count(s, k);
                unsigned long long cap = codim_upper_bound(d, k);
                log.check(static_cast<unsigned long long>(nk) <= cap, [&](std::ostream& o) {
                    o << "[" << format_word(w) << "] codim-" << k << ' ' << nk << " > " << cap;
                });
            }
        }
    }
    log.check(codim_resultant_count(Shadow({2, 1, 1, 1, 2}), 1) == 2,
              [&](std::ostream& o) { o << "[2 1 1 1 2] codim-1 != 2"; });

    // Heredity: growing one region by 2 only adds resolution classes.
    int grids = 0;
    for (int components : {1, 2}) {
        for (const LinkClass& cls : generate_rational_classes(9, components)) {
            if (cls.crossing < 4) continue;
            Word w = canonical_word(cls);
            auto base = amphi_set(Shadow(w));
            for (std::size_t i = 0; i < w.size(); ++i) {
                Word grown = w;
                grown[i] += 2;
                ++grids;
                log.check(subset_of(base, amphi_set(Shadow(grown))), [&](std::ostream& o) {
                    o << "heredity [" << format_word(w) << "] slot " << i;
                });
            }
        }
    }

    // End-tangle monotonicity: the shortened closure's classes all persist.
    for (int components : {1, 2}) {
        for (const LinkClass& cls : generate_rational_classes(10, components)) {
            Word w = canonical_word(cls);
            if (w.size() < 3) continue;
            Word shorter;
            if (w.back() % 2 == 0) {
                shorter = Word(w.begin(), w.end() - 2);
            } else {
                shorter = Word(w.begin(), w.end() - 1);
                shorter.back() += 1;
            }
            ++grids;
            log.check(subset_of(amphi_set(Shadow(shorter)), amphi_set(Shadow(w))),
                      [&](std::ostream& o) { o << "end-tangle [" << format_word(w) << "]"; });
        }
    }

    std::ostringstream clean;
    clean << words << " words bounded, " << grids << " growth checks";
    r.pass = log.pass();
    r.detail = log.detail(clean.str());
    return r;
}

CriterionResult threshold_criterion(bool include_slow) {
    CriterionResult r{8, "local fertility threshold sweeps pass", false, ""};
    FailLog log;
    ThresholdReport links = verify_local_fertility_threshold(2, 6);
    for (const ThresholdItem& item : links.items)
        log.check(item.pass, [&](std::ostream& o) {
            o << "links n=6 [" << format_word(item.word) << "] reach " << item.fertility;
        });
    std::ostringstream clean;
    clean << links.items.size() << " link words";
    if (include_slow) {
        ThresholdReport knots = verify_local_fertility_threshold(1, 10);
        for (const ThresholdItem& item : knots.items)
            log.check(item.pass, [&](std::ostream& o) {
                o << "knots n=10 [" << format_word(item.word) << "] reach " << item.fertility;
            });
        clean << ", " << knots.items.size() << " knot words";
    } else {
        clean << "; knot sweep skipped (slow checks off)";
    }
    r.pass = log.pass();
    r.detail = log.detail(clean.str());
    return r;
}

CriterionResult class_count_criterion() {
    CriterionResult r{9, "rational class counts by crossing number", false, ""};
    FailLog log;

    auto tally = [](const std::vector<LinkClass>& classes) {
        std::map<long long, int> by_crossing;
        for (const LinkClass& c : classes) ++by_crossing[c.crossing];
        return by_crossing;
    };

    auto knots = tally(generate_rational_classes(7, 1));
    std::map<long long, int> want_knots = {{3, 1}, {4, 1}, {5, 2}, {6, 3}, {7, 7}};
    log.check(knots == want_knots, [&](std::ostream& o) {
        o << "knot counts";
        for (auto& [c, n] : knots) o << ' ' << c << ':' << n;
    });

    auto links = tally(generate_rational_classes(6, 2));
    std::map<long long, int> want_links = {{2, 1}, {4, 1}, {5, 1}, {6, 3}};
    log.check(links == want_links, [&](std::ostream& o) {
        o << "link counts";
        for (auto& [c, n] : links) o << ' ' << c << ':' << n;
    });

    r.pass = log.pass();
    r.detail = log.detail("knots through 7, links through 6");
    return r;
}

CriterionResult guarded(CriterionResult (*fn)()) {
    try {
        return fn();
    } catch (const std::exception& ex) {
        CriterionResult r;
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
        return r;
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(bool include_slow) {
    std::vector<CriterionResult> out;
    struct { int id; const char* name; CriterionResult (*fn)(); } fast[] = {
        {1, "catalog fertility numbers match recomputation", catalog_fertility_criterion},
        {2, "family fertility constant under even twist growth", family_stability_criterion},
        {3, "distribution point values and the distinct-set bound", point_values_criterion},
        {4, "four 11-crossing words reach every rational knot through 8 crossings",
         deep_reach_criterion},
        {5, "assignment enumeration matches per-crossing brute force", brute_force_criterion},
        {6, "random words: rewrites preserve the fraction within the step budget",
         random_normalize_criterion},
        {7, "codimension counts and growth monotonicity respect the bounds",
         codim_bounds_criterion},
    };
    for (auto& item : fast) {
        CriterionResult r = guarded(item.fn);
        r.id = item.id;
        r.description = item.name;
        out.push_back(std::move(r));
    }

    CriterionResult c8;
    try {
        c8 = threshold_criterion(include_slow);
    } catch (const std::exception& ex) {
        c8.pass = false;
        c8.detail = std::string("exception: ") + ex.what();
    }
    c8.id = 8;
    c8.description = "local fertility threshold sweeps pass";
    out.push_back(std::move(c8));

    CriterionResult c9 = guarded(class_count_criterion);
    c9.id = 9;
    c9.description = "rational class counts by crossing number";
    out.push_back(std::move(c9));
    return out;
}

} // namespace ratlink
