#pragma once

#include <stdexcept>
#include <string>

namespace dualrank {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Data validation.
struct EmptyInput : Error {
    explicit EmptyInput(const std::string& w = "empty input") : Error(w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w = "dimension mismatch") : Error(w) {}
};
struct DimensionError : Error {
    explicit DimensionError(const std::string& w = "operation requires d=1") : Error(w) {}
};
struct NonFiniteValue : Error {
    explicit NonFiniteValue(const std::string& w = "non-finite value") : Error(w) {}
};
struct NegativeWeight : Error {
    explicit NegativeWeight(const std::string& w = "negative weight") : Error(w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w = "argument outside domain") : Error(w) {}
};

// Sample alignment.
struct AlignmentError : Error {
    explicit AlignmentError(const std::string& w = "samples are not aligned") : Error(w) {}
};
struct CountMismatch : Error {
    explicit CountMismatch(const std::string& w = "atom counts differ") : Error(w) {}
};

// Solvers and derived objects.
struct SolverFailure : Error {
    explicit SolverFailure(const std::string& w = "solver failure") : Error(w) {}
};
struct NonConvergence : Error {
    explicit NonConvergence(const std::string& w = "iteration did not converge") : Error(w) {}
};
struct NonAssignment : Error {
    explicit NonAssignment(const std::string& w = "optimal plan splits mass") : Error(w) {}
};
struct PreconditionUnmet : Error {
    explicit PreconditionUnmet(const std::string& w = "precondition unmet") : Error(w) {}
};

// Evaluation / ordering.
struct InvalidScheme : Error {
    explicit InvalidScheme(const std::string& w = "invalid weight scheme") : Error(w) {}
};
struct NegativeWeightFunction : Error {
    explicit NegativeWeightFunction(const std::string& w = "weight function must be nonnegative")
        : Error(w) {}
};
struct MeanMismatch : Error {
    explicit MeanMismatch(const std::string& w = "means differ") : Error(w) {}
};
struct InvalidTransfer : Error {
    explicit InvalidTransfer(const std::string& w = "invalid transfer") : Error(w) {}
};

// File ingestion.
struct FileNotFound : Error {
    explicit FileNotFound(const std::string& w = "file not found") : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w = "parse error") : Error(w) {}
};

}  // namespace dualrank
