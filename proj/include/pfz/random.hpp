#pragma once

#include <cstdint>
#include <random>

#include "pfz/pfn.hpp"

namespace pfz {

/// Seeded source of PFNs for fuzzing. Draws are reproducible across
/// platforms: mt19937_64 with doubles built from the top 53 bits.
class PfnSampler {
public:
    explicit PfnSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform on [0, 1).
    double unit();

    /// Uniform on {(a, b, c) in [0,1]^3 : a + b + c <= 1}, by rejection.
    Pfn interior();

    /// One of the boundary patterns: the three vertices, the origin, single
    /// and double zero components, or a sum of exactly one.
    Pfn boundary();

    /// interior() with probability 1 - boundary_rate, boundary() otherwise.
    Pfn mixed(double boundary_rate = 0.1);

    /// A pair x <= y in the inclusion order, built by shifting mass from nu
    /// into mu and eta (and from the refusal degree).
    std::pair<Pfn, Pfn> comparable_pair();

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace pfz
