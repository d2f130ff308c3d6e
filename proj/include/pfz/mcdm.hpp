#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfz/aggregators.hpp"
#include "pfz/pfn.hpp"
#include "pfz/tnorm.hpp"

namespace pfz {

enum class CriterionKind { Benefit, Cost };

struct Criterion {
    std::string name;
    CriterionKind kind = CriterionKind::Benefit;
    double weight = 0.0;
};

struct Alternative {
    std::string name;
    std::vector<Pfn> ratings;
};

/// Criteria plus an alternatives-by-criteria rating matrix.
struct DecisionProblem {
    std::vector<Criterion> criteria;
    std::vector<Alternative> alternatives;

    /// Throws InvalidProblem (empty, duplicate names, ragged rows) or
    /// InvalidWeights, naming the offending entry.
    void validate() const;
    Weights weights() const;
};

/// Cost cells are complemented and every kind becomes Benefit.
DecisionProblem normalize(const DecisionProblem& p);

struct Aggregate {
    std::string name;
    Pfn value;
};

/// One aggregated PFN per alternative, in input order. Expects a normalized
/// problem; cost criteria are not complemented here.
std::vector<Aggregate> aggregate(const DecisionProblem& p, const TnormFamily& f, Operator op);

struct RankedAlternative {
    std::string name;
    Pfn aggregated;
    ScoreProfile profile;
    int rank = 0;
};

struct RankingResult {
    /// Best first.
    std::vector<RankedAlternative> rows;
    std::optional<TnormFamily> family;
    std::optional<Operator> op;
};

/// Descending admissible order; identical aggregates keep input order.
/// Throws EmptyInput.
RankingResult rank(const std::vector<Aggregate>& aggregates);

/// normalize, aggregate and rank in one call.
RankingResult solve(const DecisionProblem& p, const TnormFamily& f, Operator op);

struct SweepRow {
    double gamma = 0.0;
    std::vector<double> scores;  // input order
    std::vector<int> ranks;      // input order
};

struct SweepTable {
    std::vector<std::string> alternatives;
    std::vector<SweepRow> rows;
};

/// `steps` evenly spaced gamma values from gamma_min to gamma_max inclusive.
/// Throws ParamOutOfDomain for steps < 2, gamma_min >= gamma_max, a family
/// without a parameter, or a grid point outside the family's domain.
SweepTable sweep_gamma(const DecisionProblem& p, Family family, Operator op, double gamma_min, double gamma_max,
                       int steps);

/// The bundled case study: six alternatives rated on four benefit criteria
/// with weights (0.2, 0.3, 0.1, 0.4).
DecisionProblem case_study();

// ---------------------------------------------------------------------------
// I/O. Readers throw ParseError for malformed text and InvalidProblem or
// Pfn validation errors for bad content; messages name the offending cell.

DecisionProblem read_problem_json(std::string_view text);
std::string write_problem_json(const DecisionProblem& p);

/// Header `name,G1_mu,G1_eta,G1_nu,G2_mu,...`. Criterion names come from the
/// header; `kinds` and `weights` (one entry per criterion) complete them.
DecisionProblem read_problem_csv(std::string_view text, const std::vector<CriterionKind>& kinds,
                                 const std::vector<double>& weights);

/// Kinds and weights from a sidecar JSON: {"criteria":[{"name":..,"kind":..,"weight":..}]}
/// matched to the CSV columns by position (names, when present, must agree).
DecisionProblem read_problem_csv(std::string_view text, std::string_view sidecar_json);

CriterionKind parse_criterion_kind(std::string_view s);
std::string_view criterion_kind_name(CriterionKind k) noexcept;

/// `rank,name,mu,eta,nu,score,h1,h2`, full precision.
std::string ranking_csv(const RankingResult& r);
std::string ranking_json(const RankingResult& r);
/// Reads ranking_json output back.
RankingResult read_ranking_json(std::string_view text);

/// `gamma,<alt>_score...,<alt>_rank...`, full precision.
std::string sweep_csv(const SweepTable& t);

/// Full-precision number formatting shared by the writers.
std::string format_number(double v);
/// Fixed four-decimal formatting for human-readable reports.
std::string format_4dp(double v);

}  // namespace pfz
