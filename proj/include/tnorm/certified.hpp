#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tnorm/errors.hpp"
#include "tnorm/linalg.hpp"

namespace tnorm {

/// Tag plus the witness data needed to re-verify a bound. The meaning of the
/// witness vectors depends on the tag; see the producing operation.
struct Certificate {
    std::string tag;
    std::vector<Vector> witness;
};

/// Two-sided enclosure for quantities the artifact cannot compute exactly.
struct CertifiedInterval {
    double lower = 0.0;
    double upper = 0.0;
    Certificate lower_cert;
    Certificate upper_cert;

    CertifiedInterval() = default;
    CertifiedInterval(double lo, double hi, Certificate lc, Certificate uc)
        : lower(lo), upper(hi), lower_cert(std::move(lc)), upper_cert(std::move(uc)) {
        if (!(lower <= upper + 1e-9))
            throw invalid_input("CertifiedInterval: lower exceeds upper");
    }
};

/// Result of a norm computation: exact value or certified interval.
using NormValue = std::variant<double, CertifiedInterval>;

inline bool is_exact(const NormValue& v) { return std::holds_alternative<double>(v); }

inline double lower_of(const NormValue& v) {
    return is_exact(v) ? std::get<double>(v) : std::get<CertifiedInterval>(v).lower;
}

inline double upper_of(const NormValue& v) {
    return is_exact(v) ? std::get<double>(v) : std::get<CertifiedInterval>(v).upper;
}

inline double exact_value(const NormValue& v) {
    if (!is_exact(v)) throw invalid_input("expected an exact norm value");
    return std::get<double>(v);
}

}  // namespace tnorm
