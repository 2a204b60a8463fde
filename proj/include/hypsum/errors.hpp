#pragma once
#include <stdexcept>
#include <string>

namespace hypsum {

// Error taxonomy used across the library. Everything detectable is thrown,
// never silently clamped or wrapped around.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {       // argument outside mathematical domain
    using Error::Error;
};
struct RangeError : Error {        // argument exceeds a table's tabulated range
    using Error::Error;
};
struct OverflowError : Error {     // exact arithmetic would overflow its word
    using Error::Error;
};
struct ContractError : Error {     // caller violated a documented precondition
    using Error::Error;
};
struct LookupError : Error {       // unknown identifier
    using Error::Error;
};
struct ResourceError : Error {     // allocation infeasible
    using Error::Error;
};
struct UnsupportedError : Error {  // beyond built-in support (e.g. Stieltjes order)
    using Error::Error;
};
struct InternalError : Error {     // invariant broken inside the library
    using Error::Error;
};
struct IoError : Error {           // serialization / file problems
    using Error::Error;
};

}  // namespace hypsum
