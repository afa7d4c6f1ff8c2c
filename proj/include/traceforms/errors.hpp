#pragma once

#include <stdexcept>
#include <string>

namespace tf {

enum class errc {
    not_prime,
    even_or_too_small,
    too_large,
    zero_argument,
    oracle_too_large,
    non_real_value,
    zero_discriminant_poly,
    constant_j_invariant,
    cost_cap_exceeded,
    field_mismatch,
    empty_set,
    rounding_drift_exceeded,
    volume_cap_exceeded,
    out_of_range,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::even_or_too_small: return "EvenOrTooSmall";
        case errc::too_large: return "TooLarge";
        case errc::zero_argument: return "ZeroArgument";
        case errc::oracle_too_large: return "OracleTooLarge";
        case errc::non_real_value: return "NonRealValue";
        case errc::zero_discriminant_poly: return "ZeroDiscriminantPoly";
        case errc::constant_j_invariant: return "ConstantJInvariant";
        case errc::cost_cap_exceeded: return "CostCapExceeded";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::empty_set: return "EmptySet";
        case errc::rounding_drift_exceeded: return "RoundingDriftExceeded";
        case errc::volume_cap_exceeded: return "VolumeCapExceeded";
        case errc::out_of_range: return "OutOfRange";
    }
    return "Unknown";
}

// Process exit code the CLI maps each error class to:
// 2 = input validation, 3 = mathematical precondition, 4 = cost cap.
inline int errc_exit_code(errc c) {
    switch (c) {
        case errc::not_prime:
        case errc::even_or_too_small:
        case errc::zero_argument:
        case errc::field_mismatch:
        case errc::empty_set:
        case errc::out_of_range:
            return 2;
        case errc::non_real_value:
        case errc::zero_discriminant_poly:
        case errc::constant_j_invariant:
        case errc::rounding_drift_exceeded:
            return 3;
        case errc::too_large:
        case errc::oracle_too_large:
        case errc::cost_cap_exceeded:
        case errc::volume_cap_exceeded:
            return 4;
    }
    return 1;
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }
    int exit_code() const noexcept { return errc_exit_code(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace tf
