#include "perdecomp/errors.hpp"

namespace perdecomp {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::invalid_parameter: return "InvalidParameter";
        case ErrorCode::incommensurate_shift: return "IncommensurateShift";
        case ErrorCode::grid_mismatch: return "GridMismatch";
        case ErrorCode::odd_sample_count: return "OddSampleCount";
        case ErrorCode::grid_not_divisible: return "GridNotDivisible";
        case ErrorCode::singular_operator: return "SingularOperator";
        case ErrorCode::not_a_divisor: return "NotADivisor";
        case ErrorCode::even_quotient: return "EvenQuotient";
        case ErrorCode::not_in_subspace: return "NotInSubspace";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::io_error: return "IoError";
    }
    return "Unknown";
}

}  // namespace perdecomp
