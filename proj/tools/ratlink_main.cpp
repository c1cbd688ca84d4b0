// ratlink_main.cpp -- command-line front end for the rational-link toolkit.
#include "ratlink/catalog.hpp"
#include "ratlink/counting.hpp"
#include "ratlink/errors.hpp"
#include "ratlink/families.hpp"
#include "ratlink/fertility.hpp"
#include "ratlink/fraction.hpp"
#include "ratlink/link_class.hpp"
#include "ratlink/resultants.hpp"
#include "ratlink/rewrite.hpp"
#include "ratlink/verify.hpp"
#include "ratlink/word.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace ratlink;

namespace {

struct GlobalOpts {
    std::string format = "text";
    bool mirror_distinct = false;
    bool trace = false;
    long long max_crossing = 12;
    std::string catalog_path;
};

const Catalog& active_catalog(const GlobalOpts& g) {
    static Catalog from_file;
    static bool loaded = false;
    if (g.catalog_path.empty()) return builtin_catalog();
    if (!loaded) {
        std::ifstream in(g.catalog_path);
        if (!in) throw DomainError("cannot open catalog file: " + g.catalog_path);
        from_file = load_catalog(in);
        loaded = true;
    }
    return from_file;
}

bool fraction_syntax(const std::string& text) {
    return text.find('/') != std::string::npos;
}

// Fraction syntax is accepted wherever a word is; a fraction names the class
// directly, a word is classified by its continued-fraction value.
LinkClass class_argument(const std::string& text) {
    if (fraction_syntax(text)) return classify(parse_fraction(text));
    return classify(parse_word(text));
}

// Shadow-taking commands turn a fraction into the canonical word of its class.
Word shadow_argument(const std::string& text) {
    if (fraction_syntax(text)) return canonical_word(class_argument(text));
    return parse_word(text);
}

ordered_json class_row(const LinkClass& c, const Catalog& cat, bool chiral_q) {
    ordered_json row;
    row["p"] = c.p;
    row["q"] = chiral_q ? c.q_chiral : c.q_amphi;
    row["components"] = c.components;
    row["crossing"] = c.crossing;
    row["name"] = cat.display_name(c);
    return row;
}

std::string text_value(const ordered_json& v) {
    if (!v.is_string()) return v.dump();
    std::string s = v.get<std::string>();
    // Bracket multi-token strings (words, patterns) so text rows stay readable.
    if (s.find(' ') != std::string::npos) return "[" + s + "]";
    return s;
}

std::string csv_value(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit_rows(const GlobalOpts& g, const std::vector<ordered_json>& rows, bool single) {
    if (g.format == "json") {
        if (single) {
            std::cout << (rows.empty() ? ordered_json::object() : rows[0]).dump(2) << '\n';
        } else {
            std::cout << ordered_json(rows).dump(2) << '\n';
        }
        return;
    }
    if (g.format == "csv") {
        if (rows.empty()) return;
        std::string header;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
            if (!header.empty()) header += ',';
            header += it.key();
        }
        std::cout << header << '\n';
        for (const ordered_json& row : rows) {
            std::string line;
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (!line.empty()) line += ',';
                line += csv_value(it.value());
            }
            std::cout << line << '\n';
        }
        return;
    }
    for (const ordered_json& row : rows) {
        std::string line;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!line.empty()) line += ' ';
            line += it.key() + '=' + text_value(it.value());
        }
        std::cout << line << '\n';
    }
}

int run_classify(const GlobalOpts& g, const std::string& input) {
    const Catalog& cat = active_catalog(g);
    LinkClass cls;
    std::vector<Word> trace;
    if (fraction_syntax(input)) {
        cls = class_argument(input);
    } else {
        Word w = parse_word(input);
        if (g.trace) {
            NormalizeResult res = normalize(w);
            cls = res.link;
            trace = std::move(res.trace);
        } else {
            cls = classify(w);
        }
    }
    ordered_json row = class_row(cls, cat, true);
    if (!trace.empty()) {
        ordered_json steps = ordered_json::array();
        for (const Word& step : trace) steps.push_back(format_word(step));
        row["trace"] = std::move(steps);
        if (g.format == "text")
            for (const Word& step : trace) std::cout << '[' << format_word(step) << "]\n";
        if (g.format == "text" || g.format == "csv") row.erase("trace");
    }
    emit_rows(g, {row}, true);
    return 0;
}

int run_resultants(const GlobalOpts& g, const std::string& input, bool distinct) {
    const Catalog& cat = active_catalog(g);
    Shadow s(shadow_argument(input));
    Distribution d = resultant_distribution(s);
    std::vector<DistributionCell> cells = g.mirror_distinct ? d.cells : d.amphichiral();
    std::vector<ordered_json> rows;
    rows.reserve(cells.size());
    for (const DistributionCell& cell : cells) {
        ordered_json row = class_row(cell.link, cat, g.mirror_distinct);
        if (!distinct) row["count"] = cell.count;
        rows.push_back(std::move(row));
    }
    emit_rows(g, rows, false);
    return 0;
}

int run_fertility(const GlobalOpts& g, const std::string& input) {
    const Catalog& cat = active_catalog(g);
    LinkClass cls = class_argument(input);
    int f = fertility_number(cls);
    if (g.format == "text") {
        std::cout << f << '\n';
        return 0;
    }
    ordered_json row = class_row(cls, cat, true);
    row["fertility"] = f;
    row["fertile"] = is_fertile(cls);
    emit_rows(g, {row}, true);
    return 0;
}

int run_frn(const GlobalOpts& g, const std::string& input) {
    const Catalog& cat = active_catalog(g);
    LinkClass cls = class_argument(input);
    int f = rational_fertility_number(cls, g.max_crossing);
    if (g.format == "text") {
        std::cout << f << '\n';
        return 0;
    }
    ordered_json row = class_row(cls, cat, true);
    row["rational_fertility"] = f;
    row["max_crossing"] = g.max_crossing;
    emit_rows(g, {row}, true);
    return 0;
}

int run_trunk(const GlobalOpts& g, int length) {
    const Catalog& cat = active_catalog(g);
    std::vector<ordered_json> rows;
    for (const Word& w : trunk_words(length)) {
        LinkClass cls = classify(w);
        ordered_json row;
        row["word"] = format_word(w);
        ordered_json info = class_row(cls, cat, g.mirror_distinct);
        for (auto& [key, value] : info.items()) row[key] = value;
        rows.push_back(std::move(row));
    }
    emit_rows(g, rows, false);
    return 0;
}

unsigned long long chiral_cell_count(const Distribution& d, const LinkClass& cls) {
    for (const DistributionCell& cell : d.cells)
        if (chiral_key(cell.link) == chiral_key(cls)) return cell.count;
    return 0;
}

unsigned long long amphi_cell_count(const std::vector<DistributionCell>& cells,
                                    const LinkClass& cls) {
    for (const DistributionCell& cell : cells)
        if (amphi_key(cell.link) == amphi_key(cls)) return cell.count;
    return 0;
}

// Multiplicity-weighted number of assignments whose signed fraction equals
// the target exactly (finer than a class-cell count; used for torus rows).
unsigned long long signed_value_count(const Shadow& s, const Fraction& target) {
    unsigned long long n = 0;
    enumerate_assignments(s, [&](const Word& a, unsigned long long mult) {
        if (cf_eval(a) == target) n += mult;
    });
    return n;
}

ordered_json count_row(const std::string& target, unsigned long long formula,
                       unsigned long long enumerated) {
    ordered_json row;
    row["target"] = target;
    row["formula"] = formula;
    row["enumerated"] = enumerated;
    row["agree"] = formula == enumerated;
    return row;
}

int run_counts(const GlobalOpts& g, const std::string& input) {
    Shadow s(shadow_argument(input));
    const Word& a = s.entries;
    std::vector<ordered_json> rows;

    if (a.size() == 1) {
        // One region: every resolution is a torus closure [k], k = a1 mod 2.
        for (long long k = a[0]; k >= 0; k -= 2) {
            std::string target = k == 0 ? "unlink" : "[" + std::to_string(k) + "]";
            rows.push_back(count_row(target, torus_resultant_count(a[0], k),
                                     signed_value_count(s, normalized(k, 1))));
        }
    } else if (a.size() == 2) {
        Distribution d = resultant_distribution(s);
        std::vector<DistributionCell> amphi = d.amphichiral();
        const bool a2_even = a[1] % 2 == 0;
        if (a[0] % 2 != 0)
            throw UnsupportedCaseError("two-region counts need an even first region");
        if (!a2_even && a[1] < 3)
            throw UnsupportedCaseError("two-region counts need the odd region to be >= 3");
        if (a2_even) {
            for (long long k = 2; k <= a[0]; k += 2)
                for (long long l = 2; l <= a[1]; l += 2) {
                    TwoTangleEvenEven c = two_tangle_counts_even_even(a[0], a[1], k, l);
                    Word plus = {k, l};
                    rows.push_back(count_row("[" + format_word(plus) + "]", c.det_plus,
                                             chiral_cell_count(d, classify(plus))));
                    Word minus = {k - 1, 1, l - 1};
                    LinkClass mcls = classify(minus);
                    unsigned long long got = k == l ? amphi_cell_count(amphi, mcls)
                                                    : chiral_cell_count(d, mcls);
                    rows.push_back(count_row("[" + format_word(minus) + "]", c.det_minus, got));
                }
            TwoTangleEvenEven c = two_tangle_counts_even_even(a[0], a[1], 2, 2);
            rows.push_back(
                count_row("unknot", c.unknot, amphi_cell_count(amphi, unknot_class())));
        } else {
            for (long long k = 2; k <= a[0]; k += 2) {
                TwoTangleEvenOdd c{};
                for (long long l = 3; l <= a[1]; l += 2) {
                    c = two_tangle_counts_even_odd(a[0], a[1], k, l);
                    Word plus = {k, l};
                    rows.push_back(count_row("[" + format_word(plus) + "]", c.det_plus,
                                             amphi_cell_count(amphi, classify(plus))));
                    Word minus = {k - 1, 1, l - 1};
                    rows.push_back(count_row("[" + format_word(minus) + "]", c.det_minus,
                                             amphi_cell_count(amphi, classify(minus))));
                }
                Word torus = {k + 1};
                rows.push_back(count_row("[" + format_word(torus) + "]", c.next_torus,
                                         amphi_cell_count(amphi, classify(torus))));
            }
            TwoTangleEvenOdd c = two_tangle_counts_even_odd(a[0], a[1], 2, 3);
            rows.push_back(
                count_row("unknot", c.unknot, amphi_cell_count(amphi, unknot_class())));
        }
    } else if (a.size() == 3) {
        const bool e1 = a[0] % 2 == 0, e2 = a[1] % 2 == 0, e3 = a[2] % 2 == 0;
        ThreeTangleCase tag;
        if (e1 && e2 && !e3) tag = ThreeTangleCase::even_even_odd;
        else if (e1 && !e2 && !e3) tag = ThreeTangleCase::even_odd_odd;
        else throw UnsupportedCaseError(
            "three-region counts exist for parities even-even-odd and even-odd-odd only");
        unsigned long long formula = three_tangle_unknot_count(a[0], a[1], a[2], tag);
        std::vector<DistributionCell> amphi = resultant_distribution(s).amphichiral();
        rows.push_back(count_row("unknot", formula, amphi_cell_count(amphi, unknot_class())));
    } else {
        throw DomainError("closed-form counts cover shadows of one to three regions");
    }

    emit_rows(g, rows, false);
    return 0;
}

int run_table(const GlobalOpts& g, int id) {
    std::vector<ordered_json> rows;
    if (id >= 2 && id <= 4) {
        const Catalog& cat = active_catalog(g);
        std::vector<const CatalogEntry*> picked;
        for (const CatalogEntry& e : cat.entries) {
            bool want = (id == 2 && e.components == 1) ||
                        (id == 3 && e.components == 2 && e.crossing <= 9) ||
                        (id == 4 && e.components == 2 && e.crossing == 10);
            if (want) picked.push_back(&e);
        }
        std::sort(picked.begin(), picked.end(), [](const CatalogEntry* x, const CatalogEntry* y) {
            return amphi_key(x->cls) < amphi_key(y->cls);
        });
        for (const CatalogEntry* e : picked) {
            ordered_json row;
            row["name"] = e->name;
            row["word"] = format_word(e->word);
            row["crossing"] = e->crossing;
            if (e->fertility) row["fertility"] = *e->fertility;
            rows.push_back(std::move(row));
        }
    } else {
        for (const FamilyRow& fam : builtin_families()) {
            if (fam.table_id != id) continue;
            ordered_json row;
            row["fertility"] = fam.stated_fertility;
            row["pattern"] = fam.pattern();
            rows.push_back(std::move(row));
        }
    }
    emit_rows(g, rows, false);
    return 0;
}

int run_verify(bool slow) {
    bool all = true;
    for (const CriterionResult& r : run_acceptance(slow)) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ": " << r.description;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << '\n';
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << '\n';
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational (2-bridge) link classifier, resolution enumerator, and "
                 "fertility calculator"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--mirror-distinct", g.mirror_distinct,
                 "keep a link and its mirror image separate");
    app.add_flag("--trace", g.trace, "print rewrite traces (classify of a word)");
    app.add_option("--max-crossing", g.max_crossing, "target cap for frn (default 12)");
    app.add_option("--catalog", g.catalog_path, "CSV file overriding the embedded catalog");

    std::string classify_in, resultants_in, fertility_in, frn_in, counts_in;
    bool distinct = false, slow = false;
    int trunk_len = 0, table_id = 0;

    CLI::App* sc_classify = app.add_subcommand("classify", "name the link a word closes to");
    sc_classify->add_option("input", classify_in, "twist word \"3 2\" or fraction \"7/2\"")
        ->required();

    CLI::App* sc_res = app.add_subcommand("resultants", "enumerate all shadow resolutions");
    sc_res->add_option("input", resultants_in, "all-positive twist word or fraction")
        ->required();
    sc_res->add_flag("--distinct", distinct, "list distinct classes without counts");

    CLI::App* sc_fert = app.add_subcommand("fertility", "fertility number of a link");
    sc_fert->add_option("input", fertility_in, "twist word or fraction")->required();

    CLI::App* sc_frn = app.add_subcommand("frn", "rational fertility number");
    sc_frn->add_option("input", frn_in, "twist word or fraction")->required();

    CLI::App* sc_trunk = app.add_subcommand("trunk", "least-complicated words of a length");
    sc_trunk->add_option("length", trunk_len, "word length")->required()
        ->check(CLI::Range(1, 16));

    CLI::App* sc_counts =
        app.add_subcommand("counts", "closed-form resolution counts vs enumeration");
    sc_counts->add_option("input", counts_in, "shadow word of one to three regions")
        ->required();

    CLI::App* sc_table = app.add_subcommand("table", "regenerate an embedded data table");
    sc_table->add_option("id", table_id, "table number (2-4 catalog, 5-11 families)")
        ->required()
        ->check(CLI::Range(2, 11));

    CLI::App* sc_verify = app.add_subcommand("verify-paper", "run the verification suite");
    sc_verify->add_flag("--slow", slow, "include the long length-9/10 trunk sweep");

    for (CLI::App* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sc_classify)) return run_classify(g, classify_in);
        if (app.got_subcommand(sc_res)) return run_resultants(g, resultants_in, distinct);
        if (app.got_subcommand(sc_fert)) return run_fertility(g, fertility_in);
        if (app.got_subcommand(sc_frn)) return run_frn(g, frn_in);
        if (app.got_subcommand(sc_trunk)) return run_trunk(g, trunk_len);
        if (app.got_subcommand(sc_counts)) return run_counts(g, counts_in);
        if (app.got_subcommand(sc_table)) return run_table(g, table_id);
        if (app.got_subcommand(sc_verify)) return run_verify(slow);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
