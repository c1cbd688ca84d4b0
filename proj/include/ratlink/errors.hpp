// errors.hpp -- exception types shared across the library.
#pragma once

#include <stdexcept>

namespace ratlink {

// Base class for everything the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's documented domain.
struct DomainError : Error { using Error::Error; };

// Exact arithmetic would leave the 64-bit range used internally.
struct OverflowError : Error { using Error::Error; };

// untangle_step applied where the adjacent entries do not disagree in sign.
struct SignsAgreeError : Error { using Error::Error; };

// A brute-force computation was asked to exceed its documented size cap.
struct LimitExceededError : Error { using Error::Error; };

// A closed-form count was queried at an index of impossible parity.
struct ParityMismatchError : Error { using Error::Error; };

// A closed-form count was queried for a parameter pattern it does not cover.
struct UnsupportedCaseError : Error { using Error::Error; };

// Catalog data failed validation against recomputed invariants.
struct CatalogInconsistentError : Error { using Error::Error; };

// The requested quantity is undefined for this input.
struct UndefinedError : Error { using Error::Error; };

// The operation needs a canonical all-positive word and got something else.
struct NonCanonicalWordError : Error { using Error::Error; };

} // namespace ratlink
