#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pfz {

/// A value on [0, +inf]. Infinity is an ordinary value here: it is what a
/// strict generator returns at 0, and sums/positive multiples absorb it.
class GeneratorValue {
public:
    constexpr GeneratorValue() noexcept = default;
    /// Throws NegativeGeneratorValue for v < 0 or NaN.
    explicit GeneratorValue(double v);

    static constexpr GeneratorValue infinity() noexcept {
        GeneratorValue g;
        g.v_ = std::numeric_limits<double>::infinity();
        return g;
    }

    constexpr double value() const noexcept { return v_; }
    constexpr bool is_infinite() const noexcept { return v_ == std::numeric_limits<double>::infinity(); }

    /// lambda * v for lambda > 0 (throws NonPositiveScalar otherwise).
    GeneratorValue scaled(double lambda) const;

    friend GeneratorValue operator+(GeneratorValue a, GeneratorValue b) noexcept {
        GeneratorValue g;
        g.v_ = a.v_ + b.v_;
        return g;
    }
    GeneratorValue& operator+=(GeneratorValue b) noexcept {
        v_ += b.v_;
        return *this;
    }
    friend constexpr auto operator<=>(GeneratorValue, GeneratorValue) = default;

private:
    double v_ = 0.0;
};

enum class Family {
    Product,
    SchweizerSklar,
    Hamacher,
    Frank,
    Dombi,
    AczelAlsina,
    /// Four-branch generator (logarithmic below 1/8, three linear pieces
    /// above). Used to exhibit non-closure of generator-wise operations.
    Piecewise,
};

/// A strict t-norm identified by its additive generator. Parameter domains:
/// Schweizer-Sklar gamma < 0; Hamacher, Dombi, Aczel-Alsina gamma > 0;
/// Frank gamma > 0, gamma != 1. Product and Piecewise take no parameter.
class TnormFamily {
public:
    /// Throws ParamOutOfDomain when gamma is missing, superfluous or outside
    /// the family's domain.
    static TnormFamily make(Family tag, std::optional<double> gamma = std::nullopt);

    static TnormFamily product() { return make(Family::Product); }
    static TnormFamily piecewise() { return make(Family::Piecewise); }

    Family tag() const noexcept { return tag_; }
    std::optional<double> gamma() const noexcept { return gamma_; }
    bool takes_parameter() const noexcept { return takes_parameter(tag_); }
    static bool takes_parameter(Family tag) noexcept;

    /// e.g. "hamacher(gamma=2)".
    std::string describe() const;

    friend bool operator==(const TnormFamily&, const TnormFamily&) = default;

private:
    TnormFamily(Family tag, std::optional<double> gamma) : tag_(tag), gamma_(gamma) {}

    Family tag_;
    std::optional<double> gamma_;
};

/// CLI/JSON names: product, schweizer-sklar, hamacher, frank, dombi,
/// aczel-alsina, piecewise.
std::string_view family_name(Family tag) noexcept;
Family parse_family_name(std::string_view name);

/// Additive generator tau on [0, 1]; tau(1) = 0, tau(0) = +inf.
GeneratorValue tau(const TnormFamily& f, double x);
/// The inverse of tau; tau_inv(+inf) = 0, tau_inv(0) = 1.
double tau_inv(const TnormFamily& f, GeneratorValue v);
double tau_inv(const TnormFamily& f, double v);

/// Dual generator zeta(u) = tau(1 - u) and its inverse 1 - tau_inv(v).
GeneratorValue zeta(const TnormFamily& f, double u);
double zeta_inv(const TnormFamily& f, GeneratorValue v);
double zeta_inv(const TnormFamily& f, double v);

double tnorm_apply(const TnormFamily& f, double x, double y);
double tconorm_apply(const TnormFamily& f, double x, double y);

/// T^(n)(x_1..x_n) = tau_inv(sum tau(x_j)); the empty case yields 1.
double tnorm_n_ary(const TnormFamily& f, std::span<const double> xs);
/// tau_inv(sum lambda_j tau(x_j)), lambda_j > 0.
double tnorm_weighted(const TnormFamily& f, std::span<const double> xs, std::span<const double> lambdas);
/// S^(n)(x_1..x_n) = zeta_inv(sum zeta(x_j)); the empty case yields 0.
double tconorm_n_ary(const TnormFamily& f, std::span<const double> xs);
double tconorm_weighted(const TnormFamily& f, std::span<const double> xs, std::span<const double> lambdas);

}  // namespace pfz
