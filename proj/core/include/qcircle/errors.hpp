#pragma once

#include <stdexcept>
#include <string>

namespace qc {

// Validation errors map to CLI exit code 2, numeric errors to exit code 3.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NonUnitConstantTerm : ValidationError {
    NonUnitConstantTerm() : ValidationError("constant term is not a unit") {}
};
struct OddDimension : ValidationError {
    OddDimension() : ValidationError("odd dimension") {}
};
struct TruncationExceeded : ValidationError {
    explicit TruncationExceeded(const std::string& w) : ValidationError("truncation exceeded: " + w) {}
};
struct HypothesisViolation : ValidationError {
    explicit HypothesisViolation(const std::string& w) : ValidationError("hypothesis violated: " + w) {}
};
struct ZeroDenominator : ValidationError {
    ZeroDenominator() : ValidationError("zero denominator") {}
};
struct DomainError : ValidationError {
    explicit DomainError(const std::string& w) : ValidationError("domain error: " + w) {}
};
struct NonpositiveCuspWeight : ValidationError {
    NonpositiveCuspWeight() : ValidationError("nonpositive cusp weight") {}
};

struct InsufficientPrecision : NumericError {
    explicit InsufficientPrecision(const std::string& w) : NumericError("insufficient precision: " + w) {}
};
struct ConvergenceFailure : NumericError {
    explicit ConvergenceFailure(const std::string& w) : NumericError("convergence failure: " + w) {}
};

}  // namespace qc
