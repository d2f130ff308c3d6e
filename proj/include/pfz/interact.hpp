#pragma once

#include <span>

#include "pfz/pfn.hpp"
#include "pfz/tnorm.hpp"

namespace pfz {

// Interactional operational laws over a strict t-norm T with generator tau.
// The neutral degree of a result is always a difference of two t-norm values
// on nested masses, which keeps every result inside the PFN domain.

/// <nu, eta, mu>.
Pfn complement(const Pfn& x) noexcept;

/// <S(mu1,mu2), T(eta1+nu1, eta2+nu2) - T(nu1,nu2), T(nu1,nu2)>.
/// Neutral element: <0, 0, 1>.
Pfn pfn_add(const TnormFamily& f, const Pfn& x, const Pfn& y);

/// <T(mu1,mu2), T(eta1+mu1, eta2+mu2) - T(mu1,mu2), S(nu1,nu2)>.
/// Neutral element: <1, 0, 0>.
Pfn pfn_mul(const TnormFamily& f, const Pfn& x, const Pfn& y);

/// lambda * x for lambda > 0 (NonPositiveScalar otherwise):
/// <zeta^-1(l zeta(mu)), tau^-1(l tau(eta+nu)) - tau^-1(l tau(nu)), tau^-1(l tau(nu))>.
Pfn scalar_mul(const TnormFamily& f, double lambda, const Pfn& x);

/// x^lambda for lambda > 0:
/// <tau^-1(l tau(mu)), tau^-1(l tau(eta+mu)) - tau^-1(l tau(mu)), zeta^-1(l zeta(nu))>.
Pfn pfn_pow(const TnormFamily& f, double lambda, const Pfn& x);

/// x_1 (+) ... (+) x_n in closed n-ary form: one generator sum per component
/// and a single inversion. Throws EmptyInput.
Pfn n_ary_add(const TnormFamily& f, std::span<const Pfn> xs);
Pfn n_ary_mul(const TnormFamily& f, std::span<const Pfn> xs);

}  // namespace pfz
