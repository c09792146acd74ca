#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hconv {

/// Parameter outside its legal domain (|a| >= 1, beta outside (0,pi), ...).
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series reciprocal requested for a series whose constant term is (near) zero.
struct NearZeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

/// A closed-form dilatation denominator dropped below tolerance at `at`.
/// Signals loss of local univalence near that point; never silently an infinity.
struct DenominatorVanishes : std::runtime_error {
    std::complex<double> at;
    explicit DenominatorVanishes(std::complex<double> z, const std::string& what_arg)
        : std::runtime_error(what_arg), at(z) {}
};

/// Cohn reduction attempted without strict leading-coefficient dominance.
struct InconclusiveBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root finder exhausted its iteration budget before meeting the residual target.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Curve too flat (or otherwise unusable) for a crossing-count test.
struct DegenerateCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace hconv
