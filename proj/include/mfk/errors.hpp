#pragma once

#include <stdexcept>
#include <string>

namespace mfk {

// All engine failures derive from Error so callers can map them onto exit codes
// without enumerating every condition.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Math failures (exit code 2 territory).
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what = "zero denominator") : Error(what) {}
};
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "singular matrix") : Error(what) {}
};
struct TransversalityFailure : Error {
    explicit TransversalityFailure(const std::string& what) : Error(what) {}
};
struct RuleShapeError : Error {
    explicit RuleShapeError(const std::string& what) : Error(what) {}
};
struct IllegalIndeterminate : Error {
    explicit IllegalIndeterminate(const std::string& what) : Error(what) {}
};
struct OrderTooLow : Error {
    explicit OrderTooLow(const std::string& what) : Error(what) {}
};
struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error(what) {}
};
struct NotMinimalOrder : Error {
    explicit NotMinimalOrder(const std::string& what) : Error(what) {}
};
struct RecursionDepth : Error {
    explicit RecursionDepth(const std::string& what) : Error(what) {}
};

// Input failures (exit code 1 territory).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};
struct ArityMismatch : ParseError {
    explicit ArityMismatch(const std::string& what) : ParseError(what) {}
};
struct UnknownName : ParseError {
    explicit UnknownName(const std::string& what) : ParseError(what) {}
};

} // namespace mfk
