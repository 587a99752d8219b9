#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

// Precondition violated by caller-supplied data (bad type/rank, non-root, invalid partition, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A mathematical invariant that must hold by theorem failed; indicates a data or logic bug.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// Embedded or overridden data could not be loaded.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InvariantError(what);
}

}  // namespace orbitlab
