#pragma once

#include <algorithm>
#include <string>

#include "pfz/error.hpp"
#include "pfz/pfn.hpp"

namespace pfz::detail {

/// Rounding slack tolerated on a neutral degree computed as a difference.
inline constexpr double kNegativeMiddleSlack = 1e-12;

/// Clamps a degree or a combined mass (eta + nu, eta + mu) into [0, 1];
/// valid inputs can sit up to kSumEps outside it.
inline double unit(double x) noexcept { return std::clamp(x, 0.0, 1.0); }

/// What a law reads from one input. `rest` is the mass outside the leading
/// degree, never below `combined`, so a leading degree rounded up to 1 cannot
/// push a result past the sum constraint.
struct Masses {
    double rest;
    double combined;
    double trailing;
};

/// Leading degree mu, trailing degree nu: the view of the additive laws.
inline Masses additive_masses(const Pfn& x) noexcept {
    const double combined = unit(x.eta() + x.nu());
    return {std::max(unit(1.0 - x.mu()), combined), combined, unit(x.nu())};
}

/// Leading degree nu, trailing degree mu: the view of the multiplicative laws.
inline Masses multiplicative_masses(const Pfn& x) noexcept {
    const double combined = unit(x.eta() + x.mu());
    return {std::max(unit(1.0 - x.nu()), combined), combined, unit(x.mu())};
}

/// Assembles the output of a closed operation. A neutral degree below
/// -kNegativeMiddleSlack, or a triple that fails validation, means the
/// implementation broke closure and is reported as InternalInconsistency.
inline Pfn closed_result(double mu, double middle, double nu, const char* op) {
    if (middle < 0.0) {
        if (middle < -kNegativeMiddleSlack) {
            throw Error(Errc::InternalInconsistency,
                        std::string(op) + " produced a negative neutral degree " + std::to_string(middle));
        }
        middle = 0.0;
    }
    try {
        return make_pfn(mu, middle, nu);
    } catch (const Error& e) {
        throw Error(Errc::InternalInconsistency, std::string(op) + " left the PFN domain: " + e.what());
    }
}

}  // namespace pfz::detail
