#include "pfz/interact.hpp"

#include "detail.hpp"
#include "pfz/error.hpp"

namespace pfz {

using detail::additive_masses;
using detail::closed_result;
using detail::Masses;
using detail::multiplicative_masses;

namespace {

// Generator-space accumulators for one PFN-valued result. Each law sums
// (optionally scaled) generator values component by component and inverts once.
struct Sums {
    GeneratorValue rest;      // tau(1 - mu) for addition-like laws, tau(1 - nu) for products
    GeneratorValue combined;  // tau(eta + nu) or tau(eta + mu)
    GeneratorValue trailing;  // tau(nu) or tau(mu)

    void add(const TnormFamily& f, const Masses& m, double scale) {
        rest += tau(f, m.rest).scaled(scale);
        combined += tau(f, m.combined).scaled(scale);
        trailing += tau(f, m.trailing).scaled(scale);
    }
};

void accumulate_additive(const TnormFamily& f, const Pfn& x, double scale, Sums& s) {
    s.add(f, additive_masses(x), scale);
}

void accumulate_multiplicative(const TnormFamily& f, const Pfn& x, double scale, Sums& s) {
    s.add(f, multiplicative_masses(x), scale);
}

Pfn finish_additive(const TnormFamily& f, const Sums& s, const char* op) {
    const double nu = tau_inv(f, s.trailing);
    return closed_result(1.0 - tau_inv(f, s.rest), tau_inv(f, s.combined) - nu, nu, op);
}

Pfn finish_multiplicative(const TnormFamily& f, const Sums& s, const char* op) {
    const double mu = tau_inv(f, s.trailing);
    return closed_result(mu, tau_inv(f, s.combined) - mu, 1.0 - tau_inv(f, s.rest), op);
}

}  // namespace

Pfn complement(const Pfn& x) noexcept { return make_pfn(x.nu(), x.eta(), x.mu()); }

Pfn pfn_add(const TnormFamily& f, const Pfn& x, const Pfn& y) {
    Sums s;
    accumulate_additive(f, x, 1.0, s);
    accumulate_additive(f, y, 1.0, s);
    return finish_additive(f, s, "pfn_add");
}

Pfn pfn_mul(const TnormFamily& f, const Pfn& x, const Pfn& y) {
    Sums s;
    accumulate_multiplicative(f, x, 1.0, s);
    accumulate_multiplicative(f, y, 1.0, s);
    return finish_multiplicative(f, s, "pfn_mul");
}

Pfn scalar_mul(const TnormFamily& f, double lambda, const Pfn& x) {
    Sums s;
    accumulate_additive(f, x, lambda, s);
    return finish_additive(f, s, "scalar_mul");
}

Pfn pfn_pow(const TnormFamily& f, double lambda, const Pfn& x) {
    Sums s;
    accumulate_multiplicative(f, x, lambda, s);
    return finish_multiplicative(f, s, "pfn_pow");
}

Pfn n_ary_add(const TnormFamily& f, std::span<const Pfn> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "n_ary_add of an empty sequence");
    Sums s;
    for (const Pfn& x : xs) accumulate_additive(f, x, 1.0, s);
    return finish_additive(f, s, "n_ary_add");
}

Pfn n_ary_mul(const TnormFamily& f, std::span<const Pfn> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "n_ary_mul of an empty sequence");
    Sums s;
    for (const Pfn& x : xs) accumulate_multiplicative(f, x, 1.0, s);
    return finish_multiplicative(f, s, "n_ary_mul");
}

}  // namespace pfz
