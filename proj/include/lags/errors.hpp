#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lags {

// Base class for everything thrown by this library.  Catch handlers in the
// CLI map subclasses onto process exit codes (data errors vs solver errors),
// so new error types should pick the right parent below.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- data / input problems ------------------------------------------------

struct DataError : Error {
    using Error::Error;
};

struct FileNotFound : DataError {
    explicit FileNotFound(const std::string& path)
        : DataError("file not found: " + path) {}
};

struct ParseError : DataError {
    std::size_t row;  // 1-based line number in the file (header = 1)
    std::size_t col;  // 1-based field number
    ParseError(std::size_t row_, std::size_t col_, const std::string& what_)
        : DataError("parse error at row " + std::to_string(row_) + ", column " +
                    std::to_string(col_) + ": " + what_),
          row(row_),
          col(col_) {}
};

struct MissingColumn : DataError {
    explicit MissingColumn(const std::string& name)
        : DataError("column not present: " + name) {}
};

struct EmptyData : DataError {
    EmptyData() : DataError("no data rows") {}
};

struct ConstantColumn : DataError {
    std::size_t index;  // 0-based predictor index
    explicit ConstantColumn(std::size_t index_)
        : DataError("column " + std::to_string(index_) +
                    " is constant; it cannot be standardized"),
          index(index_) {}
};

struct ZeroResponse : DataError {
    ZeroResponse() : DataError("centered response is identically zero") {}
};

struct BadK : DataError {
    BadK() : DataError("fold count must satisfy 2 <= k <= n") {}
    explicit BadK(const std::string& what_) : DataError(what_) {}
};

struct NotPositiveDefinite : DataError {
    NotPositiveDefinite() : DataError("covariance matrix is not positive definite") {}
    explicit NotPositiveDefinite(const std::string& what_) : DataError(what_) {}
};

struct InvalidArgument : DataError {
    explicit InvalidArgument(const std::string& what_) : DataError(what_) {}
};

// --- numerical / solver problems -------------------------------------------

struct SolverError : Error {
    using Error::Error;
};

struct SingularGram : SolverError {
    explicit SingularGram(const std::string& what_) : SolverError(what_) {}
};

struct SingularC11 : SolverError {
    SingularC11() : SolverError("support block of the correlation matrix is singular") {}
};

struct NumericalBreakdown : SolverError {
    explicit NumericalBreakdown(const std::string& what_) : SolverError(what_) {}
};

struct MaxIterations : SolverError {
    explicit MaxIterations(const std::string& what_) : SolverError(what_) {}
};

struct TooLarge : SolverError {
    explicit TooLarge(const std::string& what_) : SolverError(what_) {}
};

struct InfinitePenalty : SolverError {
    InfinitePenalty()
        : SolverError("objective is infinite: nonzero coefficient under an infinite weight") {}
};

struct AllExcluded : SolverError {
    AllExcluded() : SolverError("every coordinate carries an infinite weight") {}
};

struct IoError : Error {
    explicit IoError(const std::string& what_) : Error(what_) {}
};

}  // namespace lags
