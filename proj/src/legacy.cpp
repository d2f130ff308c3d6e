#include "pfz/legacy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "pfz/error.hpp"
#include "pfz/interact.hpp"

namespace pfz {

namespace {

using Triple = LegacyTriple;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_count(std::span<const Pfn> xs, std::size_t n, std::string_view what) {
    if (xs.size() != n) {
        throw Error(Errc::LengthMismatch, std::string(what) + " takes " + std::to_string(n) + " operand(s), got " +
                                              std::to_string(xs.size()));
    }
}

void require_positive(double lambda) {
    if (!(lambda > 0.0) || std::isinf(lambda)) {
        throw Error(Errc::NonPositiveScalar, "lambda = " + num(lambda) + " must be finite and positive");
    }
}

bool is_binary(LegacyVariant v) { return v == LegacyVariant::Add || v == LegacyVariant::Mul; }

// Checks operand count and lambda for a variant; returns true for the
// unary (scalar/power) forms.
bool check_shape(LegacyVariant v, std::span<const Pfn> xs, double lambda, std::string_view family) {
    const std::string what = std::string(family) + " " + std::string(variant_name(v));
    if (v == LegacyVariant::Scalar || v == LegacyVariant::Power) {
        require_count(xs, 1, what);
        require_positive(lambda);
        return true;
    }
    require_count(xs, 2, what);
    return false;
}

[[noreturn]] void unsupported(std::string_view family, LegacyVariant v) {
    throw Error(Errc::UnknownOperator,
                std::string(family) + " has no " + std::string(variant_name(v)) + " operation");
}

// Probabilistic-sum laws on raw triples, so that folds can carry
// intermediate results that are no longer PFNs.
Triple wei_add(const Triple& x, const Triple& y) {
    return {x.a + y.a - x.a * y.a, x.b * y.b, x.c * y.c};
}
Triple wei_mul(const Triple& x, const Triple& y) {
    return {x.a * y.a, x.b + y.b - x.b * y.b, x.c + y.c - x.c * y.c};
}
Triple wei_scalar(double l, const Triple& x) {
    return {1.0 - std::pow(1.0 - x.a, l), std::pow(x.b, l), std::pow(x.c, l)};
}
Triple wei_power(double l, const Triple& x) {
    return {std::pow(x.a, l), 1.0 - std::pow(1.0 - x.b, l), 1.0 - std::pow(1.0 - x.c, l)};
}

// Dombi pieces: odds x/(1-x) and its reciprocal, then the t-norm and
// t-conorm shapes 1/(1+r) and 1 - 1/(1+r) with r = s^(1/gamma). IEEE
// infinities give the boundary limits (S(0,x) = x, T(0,x) = 0, ...).
double odds(double x) { return x / (1.0 - x); }
double inv_odds(double x) { return (1.0 - x) / x; }
double dombi_t_shape(double s, double g) { return 1.0 / (1.0 + std::pow(s, 1.0 / g)); }
double dombi_s_shape(double s, double g) { return 1.0 - dombi_t_shape(s, g); }

double hamacher_sum(double g, double x, double y) {
    return (x + y - x * y - (1.0 - g) * x * y) / (1.0 - (1.0 - g) * x * y);
}
double hamacher_product(double g, double x, double y) {
    return x * y / (g + (1.0 - g) * (x + y - x * y));
}
// lambda-fold Hamacher sum of x with itself.
double hamacher_multiple(double g, double l, double x) {
    const double up = std::pow(1.0 + (g - 1.0) * x, l);
    const double down = std::pow(1.0 - x, l);
    return (up - down) / (up + (g - 1.0) * down);
}
// lambda-fold Hamacher product of x with itself.
double hamacher_power(double g, double l, double x) {
    const double xl = std::pow(x, l);
    return g * xl / (std::pow(1.0 + (g - 1.0) * (1.0 - x), l) + (g - 1.0) * xl);
}

// Permutations of 0..n-1 in lexicographic order.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        f(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

double factorial(std::size_t n) {
    double r = 1.0;
    for (std::size_t k = 2; k <= n; ++k) r *= static_cast<double>(k);
    return r;
}

double exponent_sum(std::span<const double> p, std::size_t n) {
    if (p.size() != n) {
        throw Error(Errc::LengthMismatch, std::to_string(p.size()) + " exponents for " + std::to_string(n) + " inputs");
    }
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    if (s == 0.0 || !std::isfinite(s)) throw Error(Errc::ParamOutOfDomain, "Muirhead exponents must have a nonzero sum");
    return s;
}

void check_bonferroni(double p, double q, std::size_t n, bool strict) {
    const bool ok = strict ? (p > 0.0 && q > 0.0) : (p >= 0.0 && q >= 0.0 && p + q > 0.0);
    if (!ok || !std::isfinite(p) || !std::isfinite(q)) {
        throw Error(Errc::ParamOutOfDomain, "Bonferroni exponents p = " + num(p) + ", q = " + num(q) +
                                                (strict ? " must both be > 0" : " must be >= 0 with p + q > 0"));
    }
    if (n < 2) throw Error(Errc::LengthMismatch, "Bonferroni means need at least two inputs");
}

void check_weight_count(const Weights& w, std::size_t n) {
    if (w.size() != n) {
        throw Error(Errc::LengthMismatch, std::to_string(n) + " inputs but " + std::to_string(w.size()) + " weights");
    }
}

// The shared shape of the Bonferroni formulas: for each component, with
// g(i,j) = x_i^p x_j^q on mu and (1-x_i)^p (1-x_j)^q on eta and nu,
//   mu  = (1 - prod (1 - g)^e_ij)^(1/(p+q)),
//   eta = 1 - (1 - prod (1 - g)^e_ij)^(1/(p+q)).
Triple bonferroni(double p, double q, std::span<const Pfn> xs, const std::function<double(std::size_t, std::size_t)>& e) {
    const std::size_t n = xs.size();
    double pm = 1.0, pe = 1.0, pn = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double ex = e(i, j);
            pm *= std::pow(1.0 - std::pow(xs[i].mu(), p) * std::pow(xs[j].mu(), q), ex);
            pe *= std::pow(1.0 - std::pow(1.0 - xs[i].eta(), p) * std::pow(1.0 - xs[j].eta(), q), ex);
            pn *= std::pow(1.0 - std::pow(1.0 - xs[i].nu(), p) * std::pow(1.0 - xs[j].nu(), q), ex);
        }
    }
    const double r = 1.0 / (p + q);
    return {std::pow(1.0 - pm, r), 1.0 - std::pow(1.0 - pe, r), 1.0 - std::pow(1.0 - pn, r)};
}

}  // namespace

bool LegacyTriple::is_pfn() const noexcept {
    auto in_range = [](double v) { return v >= -kSumEps && v <= 1.0 + kSumEps; };
    return in_range(a) && in_range(b) && in_range(c) && sum() <= 1.0 + kSumEps;
}

std::string to_text(const LegacyTriple& t) { return "<" + num(t.a) + "," + num(t.b) + "," + num(t.c) + ">"; }

std::string_view variant_name(LegacyVariant v) noexcept {
    switch (v) {
        case LegacyVariant::Meet: return "meet";
        case LegacyVariant::Join: return "join";
        case LegacyVariant::Add: return "add";
        case LegacyVariant::Mul: return "mul";
        case LegacyVariant::Scalar: return "scalar";
        case LegacyVariant::Power: return "power";
    }
    return "unknown";
}

LegacyTriple garg_ops(LegacyVariant v, const TnormFamily& g, std::span<const Pfn> xs, double lambda) {
    if (!is_binary(v) && v != LegacyVariant::Scalar && v != LegacyVariant::Power) unsupported("garg", v);
    if (check_shape(v, xs, lambda, "garg")) {
        const Pfn& x = xs[0];
        if (v == LegacyVariant::Scalar) {
            return {zeta_inv(g, zeta(g, x.mu()).scaled(lambda)), tau_inv(g, tau(g, x.eta()).scaled(lambda)),
                    tau_inv(g, tau(g, x.nu()).scaled(lambda))};
        }
        return {tau_inv(g, tau(g, x.mu()).scaled(lambda)), zeta_inv(g, zeta(g, x.eta()).scaled(lambda)),
                zeta_inv(g, zeta(g, x.nu()).scaled(lambda))};
    }
    const Pfn& x = xs[0];
    const Pfn& y = xs[1];
    if (v == LegacyVariant::Add) {
        return {tconorm_apply(g, x.mu(), y.mu()), tnorm_apply(g, x.eta(), y.eta()), tnorm_apply(g, x.nu(), y.nu())};
    }
    return {tnorm_apply(g, x.mu(), y.mu()), tconorm_apply(g, x.eta(), y.eta()), tconorm_apply(g, x.nu(), y.nu())};
}

LegacyTriple ashraf_ops(LegacyVariant v, const TnormFamily& g, std::span<const Pfn> xs, double lambda) {
    if (v != LegacyVariant::Mul && v != LegacyVariant::Power) unsupported("ashraf", v);
    if (check_shape(v, xs, lambda, "ashraf")) {
        const Pfn& x = xs[0];
        return {tau_inv(g, tau(g, x.mu()).scaled(lambda)), tau_inv(g, tau(g, x.eta()).scaled(lambda)),
                zeta_inv(g, zeta(g, x.nu()).scaled(lambda))};
    }
    const Pfn& x = xs[0];
    const Pfn& y = xs[1];
    return {tnorm_apply(g, x.mu(), y.mu()), tnorm_apply(g, x.eta(), y.eta()), tconorm_apply(g, x.nu(), y.nu())};
}

LegacyTriple dombi_ops_jspy(LegacyVariant v, double g, std::span<const Pfn> xs, double lambda) {
    if (!(g >= 1.0) || !std::isfinite(g)) {
        throw Error(Errc::ParamOutOfDomain, "Dombi gamma = " + num(g) + " must be >= 1 for these laws");
    }
    if (!is_binary(v) && v != LegacyVariant::Scalar && v != LegacyVariant::Power) unsupported("jspy-dombi", v);
    Triple t;
    auto pw = [g](double r) { return std::pow(r, g); };
    if (check_shape(v, xs, lambda, "jspy-dombi")) {
        const Pfn& x = xs[0];
        if (v == LegacyVariant::Scalar) {
            t = {dombi_s_shape(lambda * pw(odds(x.mu())), g), dombi_t_shape(lambda * pw(inv_odds(x.eta())), g),
                 dombi_t_shape(lambda * pw(inv_odds(x.nu())), g)};
        } else {
            t = {dombi_t_shape(lambda * pw(inv_odds(x.mu())), g), dombi_s_shape(lambda * pw(odds(x.eta())), g),
                 dombi_s_shape(lambda * pw(odds(x.nu())), g)};
        }
    } else {
        const Pfn& x = xs[0];
        const Pfn& y = xs[1];
        if (v == LegacyVariant::Add) {
            t = {dombi_s_shape(pw(odds(x.mu())) + pw(odds(y.mu())), g),
                 dombi_t_shape(pw(inv_odds(x.eta())) + pw(inv_odds(y.eta())), g),
                 dombi_t_shape(pw(inv_odds(x.nu())) + pw(inv_odds(y.nu())), g)};
        } else {
            t = {dombi_t_shape(pw(inv_odds(x.mu())) + pw(inv_odds(y.mu())), g),
                 dombi_s_shape(pw(odds(x.eta())) + pw(odds(y.eta())), g),
                 dombi_s_shape(pw(odds(x.nu())) + pw(odds(y.nu())), g)};
        }
    }
    if (std::isnan(t.a) || std::isnan(t.b) || std::isnan(t.c)) {
        throw Error(Errc::DegenerateComponent, "Dombi " + std::string(variant_name(v)) + " is indeterminate here");
    }
    return t;
}

LegacyTriple einstein_ops_kaa(LegacyVariant v, std::span<const Pfn> xs, double lambda) {
    if (!is_binary(v) && v != LegacyVariant::Scalar && v != LegacyVariant::Power) unsupported("kaa-einstein", v);
    auto s = [](double x, double y) { return (x + y) / (1.0 + x * y); };
    auto t = [](double x, double y) { return x * y / (1.0 + (1.0 - x) * (1.0 - y)); };
    auto multiple = [lambda](double x) {
        const double up = std::pow(1.0 + x, lambda);
        const double down = std::pow(1.0 - x, lambda);
        return (up - down) / (up + down);
    };
    auto power = [lambda](double x) {
        const double xl = std::pow(x, lambda);
        return 2.0 * xl / (std::pow(2.0 - x, lambda) + xl);
    };
    if (check_shape(v, xs, lambda, "kaa-einstein")) {
        const Pfn& x = xs[0];
        if (v == LegacyVariant::Scalar) return {multiple(x.mu()), power(x.eta()), power(x.nu())};
        return {power(x.mu()), multiple(x.eta()), multiple(x.nu())};
    }
    const Pfn& x = xs[0];
    const Pfn& y = xs[1];
    if (v == LegacyVariant::Add) return {s(x.mu(), y.mu()), t(x.eta(), y.eta()), t(x.nu(), y.nu())};
    return {t(x.mu(), y.mu()), s(x.eta(), y.eta()), s(x.nu(), y.nu())};
}

LegacyTriple wei_ops(LegacyVariant v, std::span<const Pfn> xs, double lambda) {
    if (check_shape(v, xs, lambda, "wei")) {
        const Triple x = Triple::of(xs[0]);
        return v == LegacyVariant::Scalar ? wei_scalar(lambda, x) : wei_power(lambda, x);
    }
    const Triple x = Triple::of(xs[0]);
    const Triple y = Triple::of(xs[1]);
    switch (v) {
        case LegacyVariant::Meet: return {std::min(x.a, y.a), std::max(x.b, y.b), std::max(x.c, y.c)};
        case LegacyVariant::Join: return {std::max(x.a, y.a), std::min(x.b, y.b), std::min(x.c, y.c)};
        case LegacyVariant::Add: return wei_add(x, y);
        default: return wei_mul(x, y);
    }
}

LegacyTriple wei_pfwa(const Weights& w, std::span<const Pfn> xs) {
    check_weight_count(w, xs.size());
    Triple acc = wei_scalar(w[0], Triple::of(xs[0]));
    for (std::size_t j = 1; j < xs.size(); ++j) acc = wei_add(acc, wei_scalar(w[j], Triple::of(xs[j])));
    return acc;
}

LegacyTriple wei_pfwg(const Weights& w, std::span<const Pfn> xs) {
    check_weight_count(w, xs.size());
    double pm = 1.0, pe = 1.0, pn = 1.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        pm *= std::pow(xs[j].mu(), w[j]);
        pe *= std::pow(1.0 - xs[j].eta(), w[j]);
        pn *= std::pow(1.0 - xs[j].nu(), w[j]);
    }
    return {pm, 1.0 - pe, 1.0 - pn};
}

LegacyTriple hamacher_ops_wei(LegacyVariant v, double g, std::span<const Pfn> xs, double lambda) {
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw Error(Errc::ParamOutOfDomain, "Hamacher gamma = " + num(g) + " must be > 0");
    }
    if (!is_binary(v) && v != LegacyVariant::Scalar && v != LegacyVariant::Power) unsupported("wei-hamacher", v);
    if (check_shape(v, xs, lambda, "wei-hamacher")) {
        const Pfn& x = xs[0];
        if (v == LegacyVariant::Scalar) {
            return {hamacher_multiple(g, lambda, x.mu()), hamacher_power(g, lambda, x.eta()),
                    hamacher_power(g, lambda, x.nu())};
        }
        return {hamacher_power(g, lambda, x.mu()), hamacher_multiple(g, lambda, x.eta()),
                hamacher_multiple(g, lambda, x.nu())};
    }
    const Pfn& x = xs[0];
    const Pfn& y = xs[1];
    if (v == LegacyVariant::Add) {
        return {hamacher_sum(g, x.mu(), y.mu()), hamacher_product(g, x.eta(), y.eta()),
                hamacher_product(g, x.nu(), y.nu())};
    }
    return {hamacher_product(g, x.mu(), y.mu()), hamacher_sum(g, x.eta(), y.eta()), hamacher_sum(g, x.nu(), y.nu())};
}

LegacyTriple lin_iol_ops(LegacyVariant v, std::span<const Pfn> xs, double lambda) {
    if (!is_binary(v) && v != LegacyVariant::Scalar && v != LegacyVariant::Power) unsupported("lin-iol", v);
    if (!is_binary(v) && !(lambda >= 1.0 && std::floor(lambda) == lambda && std::isfinite(lambda))) {
        throw Error(Errc::NonIntegerLambda, "lambda = " + num(lambda) + " must be a positive integer");
    }
    if (check_shape(v, xs, lambda, "lin-iol")) {
        const Pfn& x = xs[0];
        const double l = lambda;
        if (v == LegacyVariant::Scalar) {
            const double rest = std::pow(1.0 - x.mu(), l);
            return {1.0 - rest, rest - std::pow(1.0 - x.mu() - x.eta(), l), rest - std::pow(1.0 - x.mu() - x.nu(), l)};
        }
        return {std::pow(1.0 - x.nu(), l) - std::pow(1.0 - x.mu() - x.nu(), l), 1.0 - std::pow(1.0 - x.eta(), l),
                1.0 - std::pow(1.0 - x.nu(), l)};
    }
    const double m1 = xs[0].mu(), e1 = xs[0].eta(), n1 = xs[0].nu();
    const double m2 = xs[1].mu(), e2 = xs[1].eta(), n2 = xs[1].nu();
    if (v == LegacyVariant::Add) {
        return {m1 + m2 - m1 * m2, e1 + e2 - e1 * e2 - m1 * e2 - e1 * m2, n1 + n2 - n1 * n2 - m1 * n2 - n1 * m2};
    }
    return {m1 + m2 - m1 * m2 - m1 * n2 - n1 * m2, e1 + e2 - e1 * e2, n1 + n2 - n1 * n2};
}

std::string_view mean_name(MeanKind k) noexcept {
    switch (k) {
        case MeanKind::Pfmm: return "pfmm";
        case MeanKind::Pfwmm: return "pfwmm";
        case MeanKind::Pfbm: return "pfbm";
        case MeanKind::Pfnwbm: return "pfnwbm";
    }
    return "unknown";
}

LegacyTriple pfmm(std::span<const double> p, std::span<const Pfn> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "pfmm of an empty sequence");
    const std::size_t n = xs.size();
    const double r = 1.0 / exponent_sum(p, n);
    const double inv_count = 1.0 / factorial(n);
    double pm = 1.0, pe = 1.0, pn = 1.0;
    for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
        double qm = 1.0, qe = 1.0, qn = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const Pfn& x = xs[perm[j]];
            qm *= std::pow(x.mu(), p[j]);
            qe *= std::pow(1.0 - x.eta(), p[j]);
            qn *= std::pow(1.0 - x.nu(), p[j]);
        }
        pm *= std::pow(1.0 - qm, inv_count);
        pe *= std::pow(1.0 - qe, inv_count);
        pn *= std::pow(1.0 - qn, inv_count);
    });
    return {std::pow(1.0 - pm, r), 1.0 - std::pow(1.0 - pe, r), 1.0 - std::pow(1.0 - pn, r)};
}

LegacyTriple pfwmm(std::span<const double> p, const Weights& w, std::span<const Pfn> xs) {
    if (xs.empty()) throw Error(Errc::EmptyInput, "pfwmm of an empty sequence");
    const std::size_t n = xs.size();
    check_weight_count(w, n);
    const double total = exponent_sum(p, n);
    const double scale = static_cast<double>(n);
    std::optional<Triple> sum;
    for_each_permutation(n, [&](const std::vector<std::size_t>& perm) {
        std::optional<Triple> prod;
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = perm[j];
            const Triple term = wei_power(p[j], wei_scalar(scale * w[k], Triple::of(xs[k])));
            prod = prod ? wei_mul(*prod, term) : term;
        }
        sum = sum ? wei_add(*sum, *prod) : *prod;
    });
    return wei_power(1.0 / total, wei_scalar(1.0 / factorial(n), *sum));
}

LegacyTriple pfbm(double p, double q, std::span<const Pfn> xs) {
    check_bonferroni(p, q, xs.size(), false);
    const double n = static_cast<double>(xs.size());
    const double e = 1.0 / (n * (n - 1.0));
    return bonferroni(p, q, xs, [e](std::size_t, std::size_t) { return e; });
}

LegacyTriple pfnwbm(double p, double q, const Weights& w, std::span<const Pfn> xs) {
    check_bonferroni(p, q, xs.size(), true);
    check_weight_count(w, xs.size());
    return bonferroni(p, q, xs, [&w](std::size_t i, std::size_t j) { return w[i] * w[j] / (1.0 - w[i]); });
}

LegacyTriple mean_type_ops(MeanKind kind, const MeanParams& params, std::span<const Pfn> xs) {
    auto weights = [&]() -> const Weights& {
        if (!params.weights) throw Error(Errc::InvalidWeights, std::string(mean_name(kind)) + " requires weights");
        return *params.weights;
    };
    auto pq = [&]() {
        if (params.exponents.size() != 2) {
            throw Error(Errc::LengthMismatch, "Bonferroni means take two exponents (p, q)");
        }
        return std::pair{params.exponents[0], params.exponents[1]};
    };
    switch (kind) {
        case MeanKind::Pfmm: return pfmm(params.exponents, xs);
        case MeanKind::Pfwmm: return pfwmm(params.exponents, weights(), xs);
        case MeanKind::Pfbm: {
            const auto [p, q] = pq();
            return pfbm(p, q, xs);
        }
        case MeanKind::Pfnwbm: {
            const auto [p, q] = pq();
            return pfnwbm(p, q, weights(), xs);
        }
    }
    throw Error(Errc::UnknownOperator, "unknown mean kind");
}

// ---------------------------------------------------------------------------
// Registry

namespace {

using nlohmann::json;

struct Resolved {
    const OperatorCall& call;
    json& inputs;

    double lambda(double fallback) const {
        const double l = call.lambda.value_or(fallback);
        inputs["lambda"] = l;
        return l;
    }
    double gamma(double fallback) const {
        const double g = call.gamma.value_or(fallback);
        inputs["gamma"] = g;
        return g;
    }
    TnormFamily generator(const TnormFamily& fallback) const {
        const TnormFamily f = call.generator.value_or(fallback);
        json gen{{"family", std::string(family_name(f.tag()))}};
        if (f.gamma()) gen["gamma"] = *f.gamma();
        inputs["generator"] = gen;
        return f;
    }
    Weights weights() const {
        Weights w = call.weights.empty() ? Weights::uniform(call.operands.size()) : Weights(call.weights);
        inputs["weights"] = std::vector<double>(w.values().begin(), w.values().end());
        return w;
    }
    std::vector<double> exponents(std::size_t n, double fallback) const {
        std::vector<double> e = call.exponents.empty() ? std::vector<double>(n, fallback) : call.exponents;
        inputs["exponents"] = e;
        return e;
    }
};

using Handler = std::function<Triple(const Resolved&)>;

struct Entry {
    OperatorInfo info;
    Handler run;
};

constexpr double kDefaultLambda = 0.5;
constexpr double kDefaultNaturalLambda = 2.0;
constexpr double kDefaultMeanExponent = 0.5;

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        const std::pair<const char*, LegacyVariant> arith[] = {{"add", LegacyVariant::Add},
                                                               {"mul", LegacyVariant::Mul},
                                                               {"scalar", LegacyVariant::Scalar},
                                                               {"power", LegacyVariant::Power}};
        auto unary = [](LegacyVariant v) { return v == LegacyVariant::Scalar || v == LegacyVariant::Power; };
        auto info = [&](std::string id, LegacyVariant v) {
            OperatorInfo i{};
            i.id = std::move(id);
            i.arity = unary(v) ? 1 : 2;
            i.uses_lambda = unary(v);
            return i;
        };

        for (auto [name, v] : arith) {
            OperatorInfo i = info(std::string("garg-") + name, v);
            i.uses_generator = true;
            e.push_back({i, [v, u = unary(v)](const Resolved& r) {
                             return garg_ops(v, r.generator(TnormFamily::piecewise()), r.call.operands,
                                             u ? r.lambda(kDefaultLambda) : 1.0);
                         }});
        }
        for (auto [name, v] : arith) {
            if (v != LegacyVariant::Mul && v != LegacyVariant::Power) continue;
            OperatorInfo i = info(std::string("ashraf-") + name, v);
            i.uses_generator = true;
            e.push_back({i, [v, u = unary(v)](const Resolved& r) {
                             return ashraf_ops(v, r.generator(TnormFamily::piecewise()), r.call.operands,
                                               u ? r.lambda(kDefaultLambda) : 1.0);
                         }});
        }
        for (auto [name, v] : arith) {
            OperatorInfo i = info(std::string("jspy-dombi-") + name, v);
            i.uses_gamma = true;
            e.push_back({i, [v, u = unary(v)](const Resolved& r) {
                             return dombi_ops_jspy(v, r.gamma(1.0), r.call.operands,
                                                   u ? r.lambda(kDefaultLambda) : 1.0);
                         }});
        }
        for (auto [name, v] : arith) {
            e.push_back({info(std::string("kaa-einstein-") + name, v), [v, u = unary(v)](const Resolved& r) {
                             return einstein_ops_kaa(v, r.call.operands, u ? r.lambda(kDefaultLambda) : 1.0);
                         }});
        }
        const std::pair<const char*, LegacyVariant> lattice[] = {{"meet", LegacyVariant::Meet},
                                                                 {"join", LegacyVariant::Join}};
        for (auto [name, v] : lattice) {
            e.push_back({info(std::string("wei-") + name, v),
                         [v](const Resolved& r) { return wei_ops(v, r.call.operands); }});
        }
        for (auto [name, v] : arith) {
            e.push_back({info(std::string("wei-") + name, v), [v, u = unary(v)](const Resolved& r) {
                             return wei_ops(v, r.call.operands, u ? r.lambda(kDefaultLambda) : 1.0);
                         }});
        }
        {
            OperatorInfo i{};
            i.id = "wei-pfwa";
            i.arity = 2;
            i.uses_weights = true;
            e.push_back({i, [](const Resolved& r) { return wei_pfwa(r.weights(), r.call.operands); }});
            i.id = "wei-pfwg";
            e.push_back({i, [](const Resolved& r) { return wei_pfwg(r.weights(), r.call.operands); }});
        }
        for (auto [name, v] : arith) {
            OperatorInfo i = info(std::string("wei-hamacher-") + name, v);
            i.uses_gamma = true;
            e.push_back({i, [v, u = unary(v)](const Resolved& r) {
                             return hamacher_ops_wei(v, r.gamma(1.0), r.call.operands,
                                                     u ? r.lambda(kDefaultLambda) : 1.0);
                         }});
        }
        for (auto [name, v] : arith) {
            OperatorInfo i = info(std::string("lin-iol-") + name, v);
            i.natural_lambda = i.uses_lambda;
            e.push_back({i, [v, u = unary(v)](const Resolved& r) {
                             return lin_iol_ops(v, r.call.operands, u ? r.lambda(kDefaultNaturalLambda) : 1.0);
                         }});
        }
        {
            OperatorInfo i{};
            i.arity = 2;
            i.id = "pfmm";
            i.exponents = 2;
            e.push_back({i, [](const Resolved& r) {
                             return pfmm(r.exponents(r.call.operands.size(), kDefaultMeanExponent), r.call.operands);
                         }});
            i.id = "pfwmm";
            i.uses_weights = true;
            e.push_back({i, [](const Resolved& r) {
                             const auto p = r.exponents(r.call.operands.size(), kDefaultMeanExponent);
                             return pfwmm(p, r.weights(), r.call.operands);
                         }});
            i.id = "pfbm";
            i.uses_weights = false;
            e.push_back({i, [](const Resolved& r) {
                             const auto p = r.exponents(2, kDefaultMeanExponent);
                             if (p.size() != 2) throw Error(Errc::LengthMismatch, "pfbm takes two exponents (p, q)");
                             return pfbm(p[0], p[1], r.call.operands);
                         }});
            i.id = "pfnwbm";
            i.uses_weights = true;
            e.push_back({i, [](const Resolved& r) {
                             const auto p = r.exponents(2, kDefaultMeanExponent);
                             if (p.size() != 2) throw Error(Errc::LengthMismatch, "pfnwbm takes two exponents (p, q)");
                             return pfnwbm(p[0], p[1], r.weights(), r.call.operands);
                         }});
        }
        for (auto [name, v] : arith) {
            OperatorInfo i = info(std::string("interactional-") + name, v);
            i.uses_generator = true;
            e.push_back({i, [v, u = unary(v)](const Resolved& r) {
                             const TnormFamily f = r.generator(TnormFamily::product());
                             const auto& xs = r.call.operands;
                             const std::string what = "interactional-" + std::string(variant_name(v));
                             require_count(xs, u ? 1 : 2, what);
                             switch (v) {
                                 case LegacyVariant::Add: return Triple::of(pfn_add(f, xs[0], xs[1]));
                                 case LegacyVariant::Mul: return Triple::of(pfn_mul(f, xs[0], xs[1]));
                                 case LegacyVariant::Scalar:
                                     return Triple::of(scalar_mul(f, r.lambda(kDefaultLambda), xs[0]));
                                 default: return Triple::of(pfn_pow(f, r.lambda(kDefaultLambda), xs[0]));
                             }
                         }});
        }
        return e;
    }();
    return entries;
}

const Entry& find_entry(std::string_view id) {
    for (const Entry& e : registry()) {
        if (e.info.id == id) return e;
    }
    throw Error(Errc::UnknownOperator, "unknown operator '" + std::string(id) + "'");
}

}  // namespace

std::vector<std::string> registered_operators() {
    std::vector<std::string> ids;
    for (const Entry& e : registry()) ids.push_back(e.info.id);
    return ids;
}

OperatorInfo operator_info(std::string_view operator_id) { return find_entry(operator_id).info; }

ClosureReport closure_check(std::string_view operator_id, const OperatorCall& call) {
    const Entry& entry = find_entry(operator_id);
    json inputs = json::object();
    json operands = json::array();
    for (const Pfn& x : call.operands) operands.push_back({x.mu(), x.eta(), x.nu()});
    inputs["operands"] = operands;
    const Triple out = entry.run(Resolved{call, inputs});
    ClosureReport r;
    r.operator_id = entry.info.id;
    r.inputs = inputs.dump();
    r.output = out;
    r.component_sum = out.sum();
    r.is_pfn = out.is_pfn();
    return r;
}

// ---------------------------------------------------------------------------
// Counterexample fixtures

std::vector<ClosureFixture> known_counterexamples() {
    const Pfn half_quarter = make_pfn(0.5, 0.25, 0.25);
    const Pfn quarter_half = make_pfn(0.25, 0.5, 0.25);
    const Pfn low_high = make_pfn(0.25, 0.25, 0.5);
    const Pfn mu_eta = make_pfn(0.25, 0.75, 0.0);
    const Pfn mu_nu = make_pfn(0.25, 0.0, 0.75);
    const Pfn split = make_pfn(0.0, 0.5, 0.5);
    const Pfn tilt_eta = make_pfn(0.0, 0.9, 0.1);
    const Pfn tilt_nu = make_pfn(0.0, 0.1, 0.9);
    const double r3 = 2.0 / (std::sqrt(3.0) + 1.0);
    const double rs = 1.0 / std::sqrt(2.0);

    auto call = [](std::vector<Pfn> xs) {
        OperatorCall c;
        c.operands = std::move(xs);
        return c;
    };
    auto with_lambda = [](OperatorCall c, double l) {
        c.lambda = l;
        return c;
    };
    auto with_gamma = [](OperatorCall c, double g) {
        c.gamma = g;
        return c;
    };
    auto with_mean = [](OperatorCall c, std::vector<double> exps, std::vector<double> w) {
        c.exponents = std::move(exps);
        c.weights = std::move(w);
        return c;
    };
    auto piecewise = [](OperatorCall c) {
        c.generator = TnormFamily::piecewise();
        return c;
    };

    const OperatorCall tilt_pair = call({tilt_eta, tilt_nu});
    return {
        {"garg-add", "piecewise generator, <1/2,1/4,1/4> added to itself",
         piecewise(call({half_quarter, half_quarter})), {13.0 / 16, 1.0 / 8, 1.0 / 8}},
        {"garg-mul", "piecewise generator, <1/2,1/4,1/4> multiplied by itself",
         piecewise(call({half_quarter, half_quarter})), {3.0 / 16, 1.0 / 2, 1.0 / 2}},
        {"garg-scalar", "piecewise generator, 1/2 times <1/2,1/4,1/4>",
         piecewise(with_lambda(call({half_quarter}), 0.5)), {1.0 / 4, 2.0 / 3, 2.0 / 3}},
        {"garg-power", "piecewise generator, <1/4,1/2,1/4> to the power 1/2",
         piecewise(with_lambda(call({quarter_half}), 0.5)), {2.0 / 3, 1.0 / 4, 1.0 / 8}},
        {"ashraf-mul", "piecewise generator, <1/4,1/4,1/2> multiplied by itself",
         piecewise(call({low_high, low_high})), {1.0 / 8, 1.0 / 8, 13.0 / 16}},
        {"ashraf-power", "piecewise generator, <1/4,1/4,1/2> to the power 1/2",
         piecewise(with_lambda(call({low_high}), 0.5)), {2.0 / 3, 2.0 / 3, 1.0 / 4}},
        {"jspy-dombi-mul", "gamma = 1, <1/4,3/4,0> times <1/4,0,3/4>", with_gamma(call({mu_eta, mu_nu}), 1.0),
         {1.0 / 7, 3.0 / 4, 3.0 / 4}},
        {"kaa-einstein-mul", "<1/4,3/4,0> times <1/4,0,3/4>", call({mu_eta, mu_nu}), {1.0 / 25, 3.0 / 4, 3.0 / 4}},
        {"kaa-einstein-scalar", "1/2 times <0,1/2,1/2>", with_lambda(call({split}), 0.5), {0.0, r3, r3}},
        {"wei-meet", "<0,1,0> meet <0,0,1>", call({make_pfn(0, 1, 0), make_pfn(0, 0, 1)}), {0.0, 1.0, 1.0}},
        {"wei-scalar", "1/2 times <0,1/2,1/2>", with_lambda(call({split}), 0.5), {0.0, rs, rs}},
        {"wei-power", "<0,1/2,1/2> squared", with_lambda(call({split}), 2.0), {0.0, 0.75, 0.75}},
        {"wei-pfwg", "weights (1/2,1/2) on <0,0.9,0.1>, <0,0.1,0.9>", with_mean(tilt_pair, {}, {0.5, 0.5}),
         {0.0, 0.7, 0.7}},
        {"lin-iol-add", "<0,1/2,1/2> added to itself", call({split, split}), {0.0, 0.75, 0.75}},
        {"lin-iol-mul", "<0,1/2,1/2> multiplied by itself", call({split, split}), {0.0, 0.75, 0.75}},
        {"lin-iol-scalar", "2 times <0,1/2,1/2>", with_lambda(call({split}), 2.0), {0.0, 0.75, 0.75}},
        {"lin-iol-power", "<0,1/2,1/2> squared", with_lambda(call({split}), 2.0), {0.0, 0.75, 0.75}},
        {"pfmm", "P = (1/2,1/2) on <0,0.9,0.1>, <0,0.1,0.9>", with_mean(tilt_pair, {0.5, 0.5}, {}), {0.0, 0.7, 0.7}},
        {"pfwmm", "P = (1/2,1/2), weights (1/2,1/2) on <0,0.9,0.1>, <0,0.1,0.9>",
         with_mean(tilt_pair, {0.5, 0.5}, {0.5, 0.5}), {0.0, 0.7, 0.7}},
        {"pfbm", "p = q = 1/2 on <0,0.9,0.1>, <0,0.1,0.9>", with_mean(tilt_pair, {0.5, 0.5}, {}), {0.0, 0.7, 0.7}},
        {"pfnwbm", "p = q = 1/2, weights (1/2,1/2) on <0,0.9,0.1>, <0,0.1,0.9>",
         with_mean(tilt_pair, {0.5, 0.5}, {0.5, 0.5}), {0.0, 0.7, 0.7}},
    };
}

std::vector<ClosureFixture> known_counterexamples(std::string_view operator_id) {
    find_entry(operator_id);
    std::vector<ClosureFixture> out;
    for (ClosureFixture& f : known_counterexamples()) {
        if (f.operator_id == operator_id) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace pfz
