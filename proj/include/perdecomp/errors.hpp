#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace perdecomp {

enum class ErrorCode {
    length_mismatch,
    invalid_parameter,
    incommensurate_shift,
    grid_mismatch,
    odd_sample_count,
    grid_not_divisible,
    singular_operator,
    not_a_divisor,
    even_quotient,
    not_in_subspace,
    parse_error,
    io_error,
};

const char* to_string(ErrorCode code);

/// Base of every error raised by the library. Callers that only care about the
/// category can switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define PERDECOMP_DEFINE_ERROR(Name, code_value)                             \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(code_value, what) {}  \
    }

PERDECOMP_DEFINE_ERROR(LengthMismatch, ErrorCode::length_mismatch);
PERDECOMP_DEFINE_ERROR(InvalidParameter, ErrorCode::invalid_parameter);
PERDECOMP_DEFINE_ERROR(IncommensurateShift, ErrorCode::incommensurate_shift);
PERDECOMP_DEFINE_ERROR(GridMismatch, ErrorCode::grid_mismatch);
PERDECOMP_DEFINE_ERROR(OddSampleCount, ErrorCode::odd_sample_count);
PERDECOMP_DEFINE_ERROR(GridNotDivisible, ErrorCode::grid_not_divisible);
PERDECOMP_DEFINE_ERROR(NotADivisor, ErrorCode::not_a_divisor);
PERDECOMP_DEFINE_ERROR(EvenQuotient, ErrorCode::even_quotient);
PERDECOMP_DEFINE_ERROR(NotInSubspace, ErrorCode::not_in_subspace);
PERDECOMP_DEFINE_ERROR(ParseError, ErrorCode::parse_error);
PERDECOMP_DEFINE_ERROR(IoError, ErrorCode::io_error);

#undef PERDECOMP_DEFINE_ERROR

/// Raised by circulant solves when some DFT bin of the operator vanishes.
class SingularOperator : public Error {
public:
    SingularOperator(const std::string& what, std::vector<std::size_t> bins)
        : Error(ErrorCode::singular_operator, what), bins_(std::move(bins)) {}

    /// Bins whose eigenvalue magnitude fell below the singularity threshold.
    const std::vector<std::size_t>& bins() const noexcept { return bins_; }

private:
    std::vector<std::size_t> bins_;
};

}  // namespace perdecomp
