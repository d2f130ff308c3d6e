#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfz/aggregators.hpp"
#include "pfz/pfn.hpp"
#include "pfz/tnorm.hpp"

namespace pfz {

/// Output of an operator that is not closed over PFNs: three degrees with no
/// joint sum constraint.
struct LegacyTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double sum() const noexcept { return a + b + c; }
    /// Components in [0, 1] and a + b + c <= 1, both within kSumEps.
    bool is_pfn() const noexcept;

    static LegacyTriple of(const Pfn& x) noexcept { return {x.mu(), x.eta(), x.nu()}; }
    friend bool operator==(const LegacyTriple&, const LegacyTriple&) = default;
};

std::string to_text(const LegacyTriple& t);

enum class LegacyVariant { Meet, Join, Add, Mul, Scalar, Power };

std::string_view variant_name(LegacyVariant v) noexcept;

// Binary variants take exactly two operands, Scalar/Power exactly one plus
// lambda > 0. Violations throw LengthMismatch / NonPositiveScalar, and an
// unsupported variant throws UnknownOperator.

/// Generator applied to every component: add uses <zeta, tau, tau>, mul
/// <tau, zeta, zeta>, and likewise for the scalar and power forms.
LegacyTriple garg_ops(LegacyVariant v, const TnormFamily& generator, std::span<const Pfn> operands,
                      double lambda = 1.0);

/// Mul and Power only: tau on mu and eta, zeta on nu.
LegacyTriple ashraf_ops(LegacyVariant v, const TnormFamily& generator, std::span<const Pfn> operands,
                        double lambda = 1.0);

/// Dombi-rational laws for gamma >= 1 (ParamOutOfDomain otherwise). Boundary
/// components take the limit values of the Dombi t-norm and t-conorm;
/// DegenerateComponent is raised only for an indeterminate result.
LegacyTriple dombi_ops_jspy(LegacyVariant v, double gamma, std::span<const Pfn> operands, double lambda = 1.0);

/// Einstein sum and product laws.
LegacyTriple einstein_ops_kaa(LegacyVariant v, std::span<const Pfn> operands, double lambda = 1.0);

/// Probabilistic-sum / product laws, plus componentwise Meet and Join.
LegacyTriple wei_ops(LegacyVariant v, std::span<const Pfn> operands, double lambda = 1.0);

/// Sum of weighted scalar multiples under wei_ops, folded left to right.
LegacyTriple wei_pfwa(const Weights& w, std::span<const Pfn> xs);
/// <prod mu^w, 1 - prod (1-eta)^w, 1 - prod (1-nu)^w>.
LegacyTriple wei_pfwg(const Weights& w, std::span<const Pfn> xs);

/// Hamacher-rational laws, gamma > 0. gamma = 1 reproduces wei_ops.
LegacyTriple hamacher_ops_wei(LegacyVariant v, double gamma, std::span<const Pfn> operands, double lambda = 1.0);

/// Interaction laws with a natural-number lambda for Scalar and Power
/// (NonIntegerLambda otherwise).
LegacyTriple lin_iol_ops(LegacyVariant v, std::span<const Pfn> operands, double lambda = 1.0);

enum class MeanKind { Pfmm, Pfwmm, Pfbm, Pfnwbm };

std::string_view mean_name(MeanKind k) noexcept;

/// Muirhead mean over all permutations, exponents P with sum P != 0.
LegacyTriple pfmm(std::span<const double> p, std::span<const Pfn> xs);
/// Weighted Muirhead mean, evaluated by folding wei_ops.
LegacyTriple pfwmm(std::span<const double> p, const Weights& w, std::span<const Pfn> xs);
/// Bonferroni mean, p, q >= 0 with p + q > 0, at least two inputs.
LegacyTriple pfbm(double p, double q, std::span<const Pfn> xs);
/// Normalized weighted Bonferroni mean, p, q > 0, at least two inputs.
LegacyTriple pfnwbm(double p, double q, const Weights& w, std::span<const Pfn> xs);

/// Parameters for mean_type_ops: `exponents` is P for the Muirhead means and
/// (p, q) for the Bonferroni means.
struct MeanParams {
    std::vector<double> exponents;
    std::optional<Weights> weights;
};

LegacyTriple mean_type_ops(MeanKind kind, const MeanParams& params, std::span<const Pfn> xs);

// ---------------------------------------------------------------------------
// Closure auditing

/// Operands and parameters for one registered operator. Unused fields are
/// ignored; missing required ones fall back to the operator's defaults.
struct OperatorCall {
    std::vector<Pfn> operands;
    std::optional<double> lambda;
    std::optional<double> gamma;
    std::optional<TnormFamily> generator;
    std::vector<double> weights;
    std::vector<double> exponents;
};

struct ClosureReport {
    std::string operator_id;
    /// JSON object with the operands and the parameters actually used.
    std::string inputs;
    LegacyTriple output;
    double component_sum = 0.0;
    bool is_pfn = false;
};

/// Registered ids: garg-{add,mul,scalar,power}, ashraf-{mul,power},
/// jspy-dombi-{add,mul,scalar,power}, kaa-einstein-{add,mul,scalar,power},
/// wei-{meet,join,add,mul,scalar,power}, wei-pfwa, wei-pfwg,
/// wei-hamacher-{add,mul,scalar,power}, lin-iol-{add,mul,scalar,power},
/// pfmm, pfwmm, pfbm, pfnwbm, interactional-{add,mul,scalar,power}.
std::vector<std::string> registered_operators();

/// Throws UnknownOperator for an unregistered id.
ClosureReport closure_check(std::string_view operator_id, const OperatorCall& call);

/// Operator traits used when fuzzing.
struct OperatorInfo {
    std::string id;
    std::size_t arity;        // operands per call
    bool uses_lambda;         // scalar / power forms
    bool natural_lambda;      // lambda must be a positive integer
    bool uses_weights;        // weighted aggregations and means
    std::size_t exponents;    // 0, 2 (Bonferroni p, q) or arity (Muirhead P)
    bool uses_generator;      // takes a t-norm family
    bool uses_gamma;          // takes a scalar gamma (Dombi, Hamacher)
};

OperatorInfo operator_info(std::string_view operator_id);

/// A published non-closure counterexample with its exact expected output.
struct ClosureFixture {
    std::string operator_id;
    std::string label;
    OperatorCall call;
    LegacyTriple expected;
};

/// Every bundled counterexample, in a fixed order.
std::vector<ClosureFixture> known_counterexamples();
/// The subset for one operator id (possibly empty).
std::vector<ClosureFixture> known_counterexamples(std::string_view operator_id);

}  // namespace pfz
