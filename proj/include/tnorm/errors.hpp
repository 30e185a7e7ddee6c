#pragma once

#include <stdexcept>
#include <string>

namespace tnorm {

/// Error category, used by the CLI to choose exit codes: invalid input data
/// versus a size/budget cap that a smaller instance would not hit.
enum class ErrorKind { Validation, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error validation_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::Validation, code, what);
}

inline Error budget_error(const std::string& code, const std::string& what) {
    return Error(ErrorKind::Budget, code, what);
}

// Shorthand constructors for the error conditions named in the module
// contracts. Budget errors are the dimension/vertex caps.
inline Error not_symmetric(const std::string& w) { return validation_error("NotSymmetric", w); }
inline Error not_full_dimensional(const std::string& w) { return validation_error("NotFullDimensional", w); }
inline Error degenerate_cone(const std::string& w) { return validation_error("DegenerateCone", w); }
inline Error dimension_mismatch(const std::string& w) { return validation_error("DimensionMismatch", w); }
inline Error unsupported_kind(const std::string& w) { return validation_error("UnsupportedKind", w); }
inline Error unsupported_pair(const std::string& w) { return validation_error("UnsupportedPair", w); }
inline Error zero_tensor(const std::string& w) { return validation_error("ZeroTensor", w); }
inline Error not_contraction(const std::string& w) { return validation_error("NotContraction", w); }
inline Error not_two_dimensional(const std::string& w) { return validation_error("NotTwoDimensional", w); }
inline Error bad_probability_vector(const std::string& w) { return validation_error("BadProbabilityVector", w); }
inline Error invalid_input(const std::string& w) { return validation_error("InvalidInput", w); }
inline Error dimension_too_large(const std::string& w) { return budget_error("DimensionTooLarge", w); }
inline Error vertex_budget_exceeded(const std::string& w) { return budget_error("VertexBudgetExceeded", w); }
inline Error budget_exceeded(const std::string& w) { return budget_error("BudgetExceeded", w); }

}  // namespace tnorm
