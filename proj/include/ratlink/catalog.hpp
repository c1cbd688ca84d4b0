// catalog.hpp -- named rational links with tabulated fertility numbers.
#pragma once

#include "ratlink/link_class.hpp"
#include "ratlink/word.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ratlink {

struct CatalogEntry {
    std::string name; // "7_6", "6^2_3", or a "p/q" fraction label
    Word word;
    long long crossing = 0;
    int components = 0;
    std::optional<int> fertility;
    LinkClass cls;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    const CatalogEntry* find(const LinkClass& cls) const; // mirror-blind
    const CatalogEntry* find(const std::string& name) const;
    // Name for output: catalog name when known, else "p/q" (amphichiral
    // representative), with "unknot"/"unlink" for the trivial classes.
    std::string display_name(const LinkClass& cls) const;
};

// Parse catalog CSV (name,word,crossing,components,fertility; '#' comments;
// name "-" means label by fraction).  Every row is revalidated: the word
// must classify to the stated crossing and component count, and no two rows
// may share a class.  Violations throw CatalogInconsistentError.
Catalog load_catalog(std::istream& in);

// The embedded dataset (validated on first use).
const Catalog& builtin_catalog();

// Raw CSV text of the embedded dataset (catalog_data.cpp).
extern const char* const kCatalogData;

} // namespace ratlink
