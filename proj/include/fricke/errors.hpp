#pragma once

#include <stdexcept>
#include <string>

namespace fricke {

/// Failure of a numerical step that more truncation or precision might cure.
/// The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    enum class Kind {
        tail_bound_exceeded,
        indeterminate_sign,
        unstable_winding,
        no_convergence,
    };

    NumericalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A mathematical claim that failed to check out (zero count, valence
/// residual, echelon structure). The CLI maps these to exit code 2.
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact series division with v_inf(numerator) < v_inf(denominator).
class DivisionImpossible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline const char* to_string(NumericalError::Kind kind) {
    switch (kind) {
        case NumericalError::Kind::tail_bound_exceeded: return "tail-bound-exceeded";
        case NumericalError::Kind::indeterminate_sign: return "indeterminate-sign";
        case NumericalError::Kind::unstable_winding: return "unstable-winding";
        case NumericalError::Kind::no_convergence: return "no-convergence";
    }
    return "unknown";
}

}  // namespace fricke
