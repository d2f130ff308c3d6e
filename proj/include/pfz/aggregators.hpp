#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "pfz/pfn.hpp"
#include "pfz/tnorm.hpp"

namespace pfz {

/// Tolerance on the sum of a weight vector.
inline constexpr double kWeightSumEps = 1e-9;

/// Aggregation weights: every entry in (0, 1], total 1 within kWeightSumEps.
/// Invalid vectors are rejected, never renormalized.
class Weights {
public:
    /// Throws EmptyInput or InvalidWeights.
    explicit Weights(std::vector<double> w);

    /// n equal weights 1/n.
    static Weights uniform(std::size_t n);

    std::span<const double> values() const noexcept { return w_; }
    std::size_t size() const noexcept { return w_.size(); }
    double operator[](std::size_t i) const noexcept { return w_[i]; }

private:
    std::vector<double> w_;
};

enum class Operator { Pfiwa, Pfiwg, Pfiowa, Pfiowg };

/// "pfiwa", "pfiwg", "pfiowa", "pfiowg".
std::string_view operator_name(Operator op) noexcept;
/// Throws UnknownOperator.
Operator parse_operator_name(std::string_view name);

/// Weighted average: <zeta^-1(sum w zeta(mu)),
///   tau^-1(sum w tau(eta+nu)) - tau^-1(sum w tau(nu)), tau^-1(sum w tau(nu))>.
/// Throws LengthMismatch when |xs| != |w|.
Pfn pfiwa(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs);

/// Weighted geometric: <tau^-1(sum w tau(mu)),
///   tau^-1(sum w tau(eta+mu)) - tau^-1(sum w tau(mu)), zeta^-1(sum w zeta(nu))>.
Pfn pfiwg(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs);

/// Ordered variants: inputs are stable-sorted in descending admissible order
/// and weight j goes to the j-th largest input.
Pfn pfiowa(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs);
Pfn pfiowg(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs);

Pfn aggregate_with(Operator op, const TnormFamily& f, const Weights& w, std::span<const Pfn> xs);

/// Inputs sorted descending under cmp_admissible, ties kept in input order.
std::vector<Pfn> sorted_descending(std::span<const Pfn> xs);

/// Per-family explicit product/power formulas for pfiwa (op = Pfiwa) or
/// pfiwg (op = Pfiwg), evaluated without the generator layer. Meant as an
/// independent cross-check. Throws UnsupportedFamily for Piecewise and
/// UnknownOperator for the ordered operators.
Pfn closed_form(const TnormFamily& f, Operator op, const Weights& w, std::span<const Pfn> xs);

}  // namespace pfz
