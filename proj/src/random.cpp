#include "pfz/random.hpp"

#include <algorithm>

namespace pfz {

double PfnSampler::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Pfn PfnSampler::interior() {
    for (;;) {
        const double a = unit();
        const double b = unit();
        const double c = unit();
        if (a + b + c <= 1.0) return make_pfn(a, b, c);
    }
}

Pfn PfnSampler::boundary() {
    switch (rng_() % 8) {
        case 0: return make_pfn(1.0, 0.0, 0.0);
        case 1: return make_pfn(0.0, 1.0, 0.0);
        case 2: return make_pfn(0.0, 0.0, 1.0);
        case 3: return make_pfn(0.0, 0.0, 0.0);
        case 4: {
            // One zero component, the other two free.
            const Pfn x = interior();
            switch (rng_() % 3) {
                case 0: return make_pfn(0.0, x.eta(), x.nu());
                case 1: return make_pfn(x.mu(), 0.0, x.nu());
                default: return make_pfn(x.mu(), x.eta(), 0.0);
            }
        }
        case 5: {
            // Two zero components.
            const double a = unit();
            switch (rng_() % 3) {
                case 0: return make_pfn(a, 0.0, 0.0);
                case 1: return make_pfn(0.0, a, 0.0);
                default: return make_pfn(0.0, 0.0, a);
            }
        }
        case 6: {
            // mu + eta + nu = 1 up to rounding of the last component.
            const double a = unit();
            const double b = unit() * (1.0 - a);
            return make_pfn(a, b, std::max(0.0, 1.0 - a - b));
        }
        default: {
            // Refusal-free with a zero component.
            const double a = unit();
            return rng_() % 2 ? make_pfn(a, 0.0, 1.0 - a) : make_pfn(0.0, a, 1.0 - a);
        }
    }
}

Pfn PfnSampler::mixed(double boundary_rate) { return unit() < boundary_rate ? boundary() : interior(); }

std::pair<Pfn, Pfn> PfnSampler::comparable_pair() {
    const Pfn x = interior();
    // Free mass available to raise mu and eta: the refusal degree plus
    // whatever nu gives up.
    const double nu_drop = unit() * x.nu();
    const double free = std::max(0.0, x.refusal()) + nu_drop;
    const double to_mu = unit() * free;
    const double to_eta = unit() * (free - to_mu);
    return {x, make_pfn(x.mu() + to_mu, x.eta() + to_eta, x.nu() - nu_drop)};
}

}  // namespace pfz
