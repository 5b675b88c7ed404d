#ifndef QJF_ERRORS_HPP
#define QJF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qjf {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// qseries
struct ZeroLeadingTerm : Error {
    explicit ZeroLeadingTerm(const std::string& w) : Error(w) {}
};
struct BeyondTruncation : Error {
    explicit BeyondTruncation(const std::string& w) : Error(w) {}
};

// jacobi_series
struct NonRealPhase : Error {
    explicit NonRealPhase(const std::string& w) : Error(w) {}
};

// theta
struct UnsupportedPhase : Error {
    explicit UnsupportedPhase(const std::string& w) : Error(w) {}
};
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& w) : Error(w) {}
};

// decomp
struct DecompositionMismatch : Error {
    explicit DecompositionMismatch(const std::string& w) : Error(w) {}
};
struct NotConstant : Error {
    explicit NotConstant(const std::string& w) : Error(w) {}
};
struct GridMismatch : Error {
    explicit GridMismatch(const std::string& w) : Error(w) {}
};

// svoa
struct SymmetryViolation : Error {
    explicit SymmetryViolation(const std::string& w) : Error(w) {}
};

// numeric
struct ConvergenceNotReached : Error {
    explicit ConvergenceNotReached(const std::string& w) : Error(w) {}
};
struct ConvergencePoor : Error {
    explicit ConvergencePoor(const std::string& w) : Error(w) {}
};

// cli / io
struct UnknownSeries : Error {
    explicit UnknownSeries(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

} // namespace qjf

#endif
