// verify.hpp -- built-in end-to-end verification suite.
#pragma once

#include <string>
#include <vector>

namespace ratlink {

struct CriterionResult {
    int id = 0;
    std::string description;
    bool pass = false;
    std::string detail; // diagnostics on failure, summary stats otherwise
};

// Run every check in the suite, in order, catching per-criterion exceptions
// (an exception fails that criterion with the message in detail).
// include_slow adds the long local-threshold sweep over length-9/10 knot
// words; without it criterion 8 covers only the fast link half.
std::vector<CriterionResult> run_acceptance(bool include_slow);

} // namespace ratlink
