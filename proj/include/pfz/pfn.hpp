#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>

namespace pfz {

/// Slack on the membership-sum constraint. Triples whose sum lies in
/// (1, 1 + kSumEps] are accepted and stored unmodified.
inline constexpr double kSumEps = 1e-9;

/// A picture fuzzy number <mu, eta, nu>: positive, neutral and negative
/// membership degrees with mu + eta + nu <= 1. Only make_pfn constructs
/// one, so every instance satisfies the invariant.
class Pfn {
public:
    /// <0, 0, 1>, the least element under the admissible order.
    static Pfn bottom() noexcept { return Pfn(0.0, 0.0, 1.0); }
    /// <1, 0, 0>, the greatest element under the admissible order.
    static Pfn top() noexcept { return Pfn(1.0, 0.0, 0.0); }

    double mu() const noexcept { return mu_; }
    double eta() const noexcept { return eta_; }
    double nu() const noexcept { return nu_; }

    /// Refusal degree 1 - (mu + eta + nu); may dip to -kSumEps.
    double refusal() const noexcept { return 1.0 - (mu_ + eta_ + nu_); }

    friend bool operator==(const Pfn&, const Pfn&) = default;

private:
    friend Pfn make_pfn(double mu, double eta, double nu);
    Pfn(double mu, double eta, double nu) noexcept : mu_(mu), eta_(eta), nu_(nu) {}

    double mu_;
    double eta_;
    double nu_;
};

/// Validates and builds a Pfn. Throws Error with ComponentOutOfRange or
/// SumExceedsOne.
Pfn make_pfn(double mu, double eta, double nu);

/// Lexicographic key of the admissible order: score s = mu - nu, first
/// accuracy h1 = mu + nu, second accuracy h2 = mu + eta + nu.
struct ScoreProfile {
    double s;
    double h1;
    double h2;

    friend bool operator==(const ScoreProfile&, const ScoreProfile&) = default;
};

ScoreProfile score_profile(const Pfn& x) noexcept;

/// Inverts score_profile: mu = (s + h1) / 2, nu = (h1 - s) / 2, eta = h2 - h1.
Pfn from_profile(const ScoreProfile& p);

/// Grid the order keys are rounded to before comparison, so that decimal
/// inputs such as 0.3 - 0.2 and 0.2 - 0.1 compare as equal scores.
inline constexpr double kOrderQuantum = 1e-12;

/// Total admissible order: compares (s, h1, h2) lexicographically, each key
/// rounded to the kOrderQuantum grid, then mu, nu (reversed) and eta.
/// `equal` is returned only for component-wise equal inputs.
std::strong_ordering cmp_admissible(const Pfn& x, const Pfn& y) noexcept;

enum class WangVerdict { Less, Indistinguishable, Greater };

/// Score-then-accuracy comparison (accuracy = mu + eta + nu), keys rounded
/// as in cmp_admissible. Not
/// antisymmetric, so ties are reported as Indistinguishable rather than equal.
WangVerdict cmp_wang(const Pfn& x, const Pfn& y) noexcept;

/// Inclusion order: mu and eta grow, nu shrinks.
bool leq_componentwise(const Pfn& x, const Pfn& y) noexcept;

/// Maximum / minimum under cmp_admissible. Throws EmptyInput.
Pfn join_w(std::span<const Pfn> xs);
Pfn meet_w(std::span<const Pfn> xs);

/// "<mu,eta,nu>" with 17 significant digits, so parse_text round-trips.
std::string to_text(const Pfn& x);
Pfn parse_text(std::string_view text);

}  // namespace pfz
