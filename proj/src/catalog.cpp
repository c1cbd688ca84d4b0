// catalog.cpp -- catalog parsing and validation.
#include "ratlink/catalog.hpp"

#include "ratlink/errors.hpp"

#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace ratlink {

const CatalogEntry* Catalog::find(const LinkClass& cls) const {
    for (const CatalogEntry& e : entries)
        if (amphi_key(e.cls) == amphi_key(cls)) return &e;
    return nullptr;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const CatalogEntry& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

std::string Catalog::display_name(const LinkClass& cls) const {
    if (cls.p == 0) return "unlink";
    if (cls.p == 1) return "unknot";
    if (const CatalogEntry* e = find(cls)) return e->name;
    return std::to_string(cls.p) + "/" + std::to_string(cls.q_amphi);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    for (std::string& f : fields) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.pop_back();
    }
    return fields;
}

} // namespace

Catalog load_catalog(std::istream& in) {
    Catalog cat;
    std::set<std::string> names;
    std::map<ClassKey, std::string> classes;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto fields = split_csv(trimmed);
        const std::string where = "catalog line " + std::to_string(lineno);
        if (fields.size() != 5)
            throw CatalogInconsistentError(where + ": expected 5 fields");
        CatalogEntry e;
        try {
            e.word = parse_word(fields[1]);
            e.crossing = std::stoll(fields[2]);
            e.components = std::stoi(fields[3]);
            if (!fields[4].empty()) e.fertility = std::stoi(fields[4]);
        } catch (const std::exception& ex) {
            throw CatalogInconsistentError(where + ": " + ex.what());
        }
        for (long long a : e.word)
            if (a < 1) throw CatalogInconsistentError(where + ": word entries must be positive");
        e.cls = classify(e.word);
        if (e.cls.crossing != e.crossing || twist_total(e.word) != e.crossing)
            throw CatalogInconsistentError(where + ": word does not classify to the stated crossing number");
        if (e.cls.components != e.components)
            throw CatalogInconsistentError(where + ": word does not classify to the stated component count");
        e.name = fields[0] == "-"
                     ? std::to_string(e.cls.p) + "/" + std::to_string(e.cls.q_amphi)
                     : fields[0];
        if (e.name.empty() || !names.insert(e.name).second)
            throw CatalogInconsistentError(where + ": missing or duplicate name " + e.name);
        auto [it, fresh] = classes.emplace(amphi_key(e.cls), e.name);
        if (!fresh)
            throw CatalogInconsistentError(where + ": class already listed as " + it->second);
        cat.entries.push_back(std::move(e));
    }
    if (cat.entries.empty()) throw CatalogInconsistentError("catalog has no rows");
    return cat;
}

const Catalog& builtin_catalog() {
    static const Catalog cat = [] {
        std::istringstream in(kCatalogData);
        return load_catalog(in);
    }();
    return cat;
}

} // namespace ratlink
