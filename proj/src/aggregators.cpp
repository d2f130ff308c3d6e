#include "pfz/aggregators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "detail.hpp"
#include "pfz/error.hpp"

namespace pfz {

using detail::additive_masses;
using detail::closed_result;
using detail::Masses;
using detail::multiplicative_masses;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_lengths(const Weights& w, std::span<const Pfn> xs) {
    if (xs.size() != w.size()) {
        throw Error(Errc::LengthMismatch,
                    std::to_string(xs.size()) + " inputs but " + std::to_string(w.size()) + " weights");
    }
}

}  // namespace

Weights::Weights(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw Error(Errc::EmptyInput, "weight vector is empty");
    double sum = 0.0;
    for (std::size_t j = 0; j < w_.size(); ++j) {
        const double v = w_[j];
        if (!(v > 0.0 && v <= 1.0)) {
            throw Error(Errc::InvalidWeights, "weight " + std::to_string(j + 1) + " = " + num(v) + " is outside (0, 1]");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kWeightSumEps) {
        throw Error(Errc::InvalidWeights, "weights sum to " + num(sum) + ", expected 1");
    }
}

Weights Weights::uniform(std::size_t n) {
    if (n == 0) throw Error(Errc::EmptyInput, "weight vector is empty");
    return Weights(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::string_view operator_name(Operator op) noexcept {
    switch (op) {
        case Operator::Pfiwa: return "pfiwa";
        case Operator::Pfiwg: return "pfiwg";
        case Operator::Pfiowa: return "pfiowa";
        case Operator::Pfiowg: return "pfiowg";
    }
    return "unknown";
}

Operator parse_operator_name(std::string_view name) {
    for (Operator op : {Operator::Pfiwa, Operator::Pfiwg, Operator::Pfiowa, Operator::Pfiowg}) {
        if (operator_name(op) == name) return op;
    }
    throw Error(Errc::UnknownOperator, "unknown aggregation operator '" + std::string(name) + "'");
}

Pfn pfiwa(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs) {
    check_lengths(w, xs);
    GeneratorValue rest, combined, neg;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const Masses m = additive_masses(xs[j]);
        rest += tau(f, m.rest).scaled(w[j]);
        combined += tau(f, m.combined).scaled(w[j]);
        neg += tau(f, m.trailing).scaled(w[j]);
    }
    const double nu = tau_inv(f, neg);
    return closed_result(1.0 - tau_inv(f, rest), tau_inv(f, combined) - nu, nu, "pfiwa");
}

Pfn pfiwg(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs) {
    check_lengths(w, xs);
    GeneratorValue pos, combined, rest;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const Masses m = multiplicative_masses(xs[j]);
        pos += tau(f, m.trailing).scaled(w[j]);
        combined += tau(f, m.combined).scaled(w[j]);
        rest += tau(f, m.rest).scaled(w[j]);
    }
    const double mu = tau_inv(f, pos);
    return closed_result(mu, tau_inv(f, combined) - mu, 1.0 - tau_inv(f, rest), "pfiwg");
}

std::vector<Pfn> sorted_descending(std::span<const Pfn> xs) {
    std::vector<Pfn> out(xs.begin(), xs.end());
    std::stable_sort(out.begin(), out.end(), [](const Pfn& a, const Pfn& b) { return cmp_admissible(a, b) > 0; });
    return out;
}

Pfn pfiowa(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs) {
    check_lengths(w, xs);
    const std::vector<Pfn> sorted = sorted_descending(xs);
    return pfiwa(f, w, sorted);
}

Pfn pfiowg(const TnormFamily& f, const Weights& w, std::span<const Pfn> xs) {
    check_lengths(w, xs);
    const std::vector<Pfn> sorted = sorted_descending(xs);
    return pfiwg(f, w, sorted);
}

Pfn aggregate_with(Operator op, const TnormFamily& f, const Weights& w, std::span<const Pfn> xs) {
    switch (op) {
        case Operator::Pfiwa: return pfiwa(f, w, xs);
        case Operator::Pfiwg: return pfiwg(f, w, xs);
        case Operator::Pfiowa: return pfiowa(f, w, xs);
        case Operator::Pfiowg: return pfiowg(f, w, xs);
    }
    throw Error(Errc::UnknownOperator, "unknown aggregation operator");
}

// ---------------------------------------------------------------------------
// Explicit family formulas.
//
// Each family provides the weighted t-norm M(x) = T_w(x_1..x_n) written out in
// elementary functions. The weighted t-conorm is 1 - M(1 - x). Both operators
// are then assembled from M alone.

namespace {

using Column = std::vector<double>;
using WeightedTnorm = std::function<double(const Column&)>;

double product_form(const Weights& w, const Column& x) {
    double p = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) p *= std::pow(x[j], w[j]);
    return p;
}

// (sum w x^g)^(1/g), g < 0.
double schweizer_sklar_form(double g, const Weights& w, const Column& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += w[j] * std::pow(x[j], g);
    return std::pow(s, 1.0 / g);
}

// g / (P - 1 + g), P = prod ((g + (1-g) x) / x)^w.
double hamacher_form(double g, const Weights& w, const Column& x) {
    double p = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) p *= std::pow((g + (1.0 - g) * x[j]) / x[j], w[j]);
    if (std::isinf(p)) return 0.0;
    return g / (p - 1.0 + g);
}

// log_g(1 + (g-1) prod ((g^x - 1)/(g - 1))^w). For weights summing to one
// and g > 1 this is log_g(1 + prod (g^x - 1)^w); the normalized ratio keeps
// the base positive when g < 1 as well.
double frank_form(double g, const Weights& w, const Column& x) {
    double p = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) p *= std::pow((std::pow(g, x[j]) - 1.0) / (g - 1.0), w[j]);
    return std::log(1.0 + (g - 1.0) * p) / std::log(g);
}

// 1 / (1 + (sum w ((1-x)/x)^g)^(1/g)).
double dombi_form(double g, const Weights& w, const Column& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += w[j] * std::pow((1.0 - x[j]) / x[j], g);
    const double r = std::pow(s, 1.0 / g);
    if (std::isinf(r)) return 0.0;
    return 1.0 / (1.0 + r);
}

// exp(-(sum w (-ln x)^g)^(1/g)).
double aczel_alsina_form(double g, const Weights& w, const Column& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += w[j] * std::pow(-std::log(x[j]), g);
    return std::exp(-std::pow(s, 1.0 / g));
}

WeightedTnorm weighted_tnorm_form(const TnormFamily& f, const Weights& w) {
    const double g = f.gamma().value_or(0.0);
    switch (f.tag()) {
        case Family::Product: return [&w](const Column& x) { return product_form(w, x); };
        case Family::SchweizerSklar: return [&w, g](const Column& x) { return schweizer_sklar_form(g, w, x); };
        case Family::Hamacher: return [&w, g](const Column& x) { return hamacher_form(g, w, x); };
        case Family::Frank: return [&w, g](const Column& x) { return frank_form(g, w, x); };
        case Family::Dombi: return [&w, g](const Column& x) { return dombi_form(g, w, x); };
        case Family::AczelAlsina: return [&w, g](const Column& x) { return aczel_alsina_form(g, w, x); };
        case Family::Piecewise: break;
    }
    throw Error(Errc::UnsupportedFamily, f.describe() + " has no closed-form aggregation");
}

}  // namespace

Pfn closed_form(const TnormFamily& f, Operator op, const Weights& w, std::span<const Pfn> xs) {
    if (op != Operator::Pfiwa && op != Operator::Pfiwg) {
        throw Error(Errc::UnknownOperator, "closed_form covers pfiwa and pfiwg only");
    }
    check_lengths(w, xs);
    const WeightedTnorm m = weighted_tnorm_form(f, w);
    Column rest, combined, trailing;
    for (const Pfn& x : xs) {
        const Masses v = op == Operator::Pfiwa ? additive_masses(x) : multiplicative_masses(x);
        rest.push_back(v.rest);
        combined.push_back(v.combined);
        trailing.push_back(v.trailing);
    }
    const double t = m(trailing);
    const double lead = 1.0 - m(rest);
    if (op == Operator::Pfiwa) return closed_result(lead, m(combined) - t, t, "closed_form");
    return closed_result(t, m(combined) - t, lead, "closed_form");
}

}  // namespace pfz
