#include "pfz/tnorm.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "pfz/error.hpp"

namespace pfz {

namespace {

const double kLog8 = std::log(8.0);

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// log(e^t - 1) for t > 0 without overflowing e^t.
double log_expm1(double t) {
    return t > 30.0 ? t + std::log1p(-std::exp(-t)) : std::log(std::expm1(t));
}

// log(1 + e^c).
double softplus(double c) {
    return c > 0.0 ? c + std::log1p(std::exp(-c)) : std::log1p(std::exp(c));
}

void check_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(Errc::InputOutOfRange, std::string(what) + " argument " + num(x) + " is outside [0, 1]");
    }
}

double piecewise_tau(double x) {
    if (x <= 1.0 / 8.0) return -std::log(x) / kLog8 - 1.0 / 3.0;
    if (x <= 1.0 / 4.0) return 1.0 - 8.0 * x / 3.0;
    if (x <= 1.0 / 2.0) return 5.0 / 12.0 - x / 3.0;
    return (1.0 - x) / 2.0;
}

double piecewise_tau_inv(double v) {
    if (v <= 1.0 / 4.0) return 1.0 - 2.0 * v;
    if (v <= 1.0 / 3.0) return (5.0 / 12.0 - v) * 3.0;
    if (v <= 2.0 / 3.0) return 3.0 * (1.0 - v) / 8.0;
    return std::exp(-(v + 1.0 / 3.0) * kLog8);
}

}  // namespace

GeneratorValue::GeneratorValue(double v) : v_(v) {
    if (!(v >= 0.0)) throw Error(Errc::NegativeGeneratorValue, "generator value " + num(v) + " is negative");
}

GeneratorValue GeneratorValue::scaled(double lambda) const {
    if (!(lambda > 0.0) || std::isinf(lambda)) {
        throw Error(Errc::NonPositiveScalar, "scale factor " + num(lambda) + " must be finite and positive");
    }
    GeneratorValue g;
    g.v_ = lambda * v_;
    return g;
}

bool TnormFamily::takes_parameter(Family tag) noexcept {
    return tag != Family::Product && tag != Family::Piecewise;
}

TnormFamily TnormFamily::make(Family tag, std::optional<double> gamma) {
    const std::string name(family_name(tag));
    if (!takes_parameter(tag)) {
        if (gamma) throw Error(Errc::ParamOutOfDomain, name + " takes no gamma parameter");
        return TnormFamily(tag, std::nullopt);
    }
    if (!gamma) throw Error(Errc::ParamOutOfDomain, name + " requires a gamma parameter");
    const double g = *gamma;
    if (!std::isfinite(g)) throw Error(Errc::ParamOutOfDomain, name + " gamma must be finite");
    switch (tag) {
        case Family::SchweizerSklar:
            if (!(g < 0.0)) throw Error(Errc::ParamOutOfDomain, "schweizer-sklar gamma = " + num(g) + " must be < 0");
            break;
        case Family::Frank:
            if (g == 1.0) {
                throw Error(Errc::ParamOutOfDomain, "frank gamma = 1 is excluded; use the product family instead");
            }
            if (!(g > 0.0)) throw Error(Errc::ParamOutOfDomain, "frank gamma = " + num(g) + " must be > 0");
            break;
        default:
            if (!(g > 0.0)) throw Error(Errc::ParamOutOfDomain, name + " gamma = " + num(g) + " must be > 0");
            break;
    }
    return TnormFamily(tag, g);
}

std::string TnormFamily::describe() const {
    std::string s(family_name(tag_));
    if (gamma_) s += "(gamma=" + num(*gamma_) + ")";
    return s;
}

std::string_view family_name(Family tag) noexcept {
    switch (tag) {
        case Family::Product: return "product";
        case Family::SchweizerSklar: return "schweizer-sklar";
        case Family::Hamacher: return "hamacher";
        case Family::Frank: return "frank";
        case Family::Dombi: return "dombi";
        case Family::AczelAlsina: return "aczel-alsina";
        case Family::Piecewise: return "piecewise";
    }
    return "unknown";
}

Family parse_family_name(std::string_view name) {
    for (Family f : {Family::Product, Family::SchweizerSklar, Family::Hamacher, Family::Frank, Family::Dombi,
                     Family::AczelAlsina, Family::Piecewise}) {
        if (family_name(f) == name) return f;
    }
    throw Error(Errc::ParamOutOfDomain, "unknown t-norm family '" + std::string(name) + "'");
}

GeneratorValue tau(const TnormFamily& f, double x) {
    check_unit(x, "tau");
    if (x == 1.0) return GeneratorValue();
    if (x == 0.0) return GeneratorValue::infinity();
    const double g = f.gamma().value_or(0.0);
    double v = 0.0;
    switch (f.tag()) {
        case Family::Product: v = -std::log(x); break;
        case Family::SchweizerSklar: v = std::pow(x, g) - 1.0; break;
        case Family::Hamacher: v = std::log1p(g * (1.0 - x) / x); break;
        case Family::Frank: {
            const double lg = std::log(g);
            if (g > 1.0) {
                v = log_expm1(lg) - log_expm1(x * lg);
            } else {
                v = -std::log(std::expm1(x * lg) / std::expm1(lg));
            }
            break;
        }
        case Family::Dombi: v = std::pow((1.0 - x) / x, g); break;
        case Family::AczelAlsina: v = std::pow(-std::log(x), g); break;
        case Family::Piecewise: v = piecewise_tau(x); break;
    }
    // Rounding may push a value just below zero near x = 1.
    return GeneratorValue(v < 0.0 ? 0.0 : v);
}

double tau_inv(const TnormFamily& f, GeneratorValue gv) {
    const double v = gv.value();
    if (v == 0.0) return 1.0;
    if (gv.is_infinite()) return 0.0;
    const double g = f.gamma().value_or(0.0);
    double x = 0.0;
    switch (f.tag()) {
        case Family::Product: x = std::exp(-v); break;
        case Family::SchweizerSklar: x = std::exp(std::log1p(v) / g); break;
        case Family::Hamacher: x = g / (std::expm1(v) + g); break;
        case Family::Frank: {
            const double lg = std::log(g);
            if (g > 1.0) {
                x = softplus(log_expm1(lg) - v) / lg;
            } else {
                x = std::log1p(std::expm1(lg) * std::exp(-v)) / lg;
            }
            break;
        }
        case Family::Dombi: x = 1.0 / (1.0 + std::pow(v, 1.0 / g)); break;
        case Family::AczelAlsina: x = std::exp(-std::pow(v, 1.0 / g)); break;
        case Family::Piecewise: x = piecewise_tau_inv(v); break;
    }
    if (x < 0.0) return 0.0;
    if (x > 1.0) return 1.0;
    return x;
}

double tau_inv(const TnormFamily& f, double v) { return tau_inv(f, GeneratorValue(v)); }

GeneratorValue zeta(const TnormFamily& f, double u) {
    check_unit(u, "zeta");
    return tau(f, 1.0 - u);
}

double zeta_inv(const TnormFamily& f, GeneratorValue v) { return 1.0 - tau_inv(f, v); }

double zeta_inv(const TnormFamily& f, double v) { return zeta_inv(f, GeneratorValue(v)); }

double tnorm_apply(const TnormFamily& f, double x, double y) { return tau_inv(f, tau(f, x) + tau(f, y)); }

double tconorm_apply(const TnormFamily& f, double x, double y) { return zeta_inv(f, zeta(f, x) + zeta(f, y)); }

double tnorm_n_ary(const TnormFamily& f, std::span<const double> xs) {
    GeneratorValue acc;
    for (double x : xs) acc += tau(f, x);
    return tau_inv(f, acc);
}

double tnorm_weighted(const TnormFamily& f, std::span<const double> xs, std::span<const double> lambdas) {
    if (xs.size() != lambdas.size()) {
        throw Error(Errc::LengthMismatch, std::to_string(xs.size()) + " arguments but " +
                                              std::to_string(lambdas.size()) + " exponents");
    }
    GeneratorValue acc;
    for (std::size_t j = 0; j < xs.size(); ++j) acc += tau(f, xs[j]).scaled(lambdas[j]);
    return tau_inv(f, acc);
}

double tconorm_n_ary(const TnormFamily& f, std::span<const double> xs) {
    GeneratorValue acc;
    for (double x : xs) acc += zeta(f, x);
    return zeta_inv(f, acc);
}

double tconorm_weighted(const TnormFamily& f, std::span<const double> xs, std::span<const double> lambdas) {
    if (xs.size() != lambdas.size()) {
        throw Error(Errc::LengthMismatch, std::to_string(xs.size()) + " arguments but " +
                                              std::to_string(lambdas.size()) + " exponents");
    }
    GeneratorValue acc;
    for (std::size_t j = 0; j < xs.size(); ++j) acc += zeta(f, xs[j]).scaled(lambdas[j]);
    return zeta_inv(f, acc);
}

}  // namespace pfz
