// Acceptance driver: prints one PASS/FAIL line per criterion.
// Usage: pfz_acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "counterexamples.hpp"
#include "oracles.hpp"
#include "pfz/legacy.hpp"
#include "pfz/mcdm.hpp"
#include "properties.hpp"

using pfz::Family;
using pfz::Operator;
using pfz::TnormFamily;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond) {
            if (pass) detail = why;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const double kAggregates[6][3] = {{0.4229, 0.2492, 0.2232}, {0.6046, 0.2314, 0.1414}, {0.4373, 0.2355, 0.2158},
                                  {0.3667, 0.1883, 0.1780}, {0.4804, 0.2062, 0.1282}, {0.2700, 0.2466, 0.3305}};
const double kScores[6] = {0.1997, 0.4632, 0.2215, 0.1887, 0.3522, -0.0605};

Verdict case_study_aggregates() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto aggs = pfz::aggregate(pfz::case_study(), TnormFamily::product(), Operator::Pfiwa);
    const double elapsed = seconds_since(t0);
    v.require(aggs.size() == 6, "expected 6 aggregates");
    double worst = 0.0;
    for (std::size_t i = 0; i < aggs.size() && i < 6; ++i) {
        const auto& x = aggs[i].value;
        worst = std::fmax(worst, oracle::max_abs_diff(x, oracle::Triple{kAggregates[i][0], kAggregates[i][1], kAggregates[i][2]}));
    }
    v.require(worst <= 5e-4, "component deviation " + fmt("%.3g", worst));
    v.require(elapsed < 1.0, "runtime " + fmt("%.3f", elapsed) + " s");
    if (v.pass) v.detail = "max deviation " + fmt("%.2e", worst) + ", " + fmt("%.4f", elapsed) + " s";
    return v;
}

Verdict case_study_ranking() {
    Verdict v;
    const auto r = pfz::solve(pfz::case_study(), TnormFamily::product(), Operator::Pfiwa);
    const char* names[] = {"A1", "A2", "A3", "A4", "A5", "A6"};
    double worst = 0.0;
    std::string order;
    for (const auto& row : r.rows) {
        for (int i = 0; i < 6; ++i) {
            if (row.name == names[i]) worst = std::fmax(worst, std::fabs(row.profile.s - kScores[i]));
        }
        order += (order.empty() ? "" : " > ") + row.name;
    }
    v.require(worst <= 5e-4, "score deviation " + fmt("%.3g", worst));
    v.require(order == "A2 > A5 > A3 > A1 > A4 > A6", "ranking " + order);
    if (v.pass) v.detail = order + ", max score deviation " + fmt("%.2e", worst);
    return v;
}

Verdict counterexamples() {
    Verdict v;
    const auto fixtures = pfz::known_counterexamples();
    for (const auto& fx : fixtures) {
        const auto it = frozen::counterexamples().find(fx.operator_id);
        if (it == frozen::counterexamples().end()) {
            v.require(false, "no frozen value for " + fx.operator_id);
            continue;
        }
        const pfz::ClosureReport r = pfz::closure_check(fx.operator_id, fx.call);
        const auto& e = it->second;
        const double d = std::fmax(std::fabs(r.output.a - e.a), std::fmax(std::fabs(r.output.b - e.b), std::fabs(r.output.c - e.c)));
        v.require(d <= 1e-12, fx.operator_id + " deviates by " + fmt("%.3g", d));
        v.require(!r.is_pfn, fx.operator_id + " reported as a PFN");
    }
    v.require(fixtures.size() == frozen::counterexamples().size(), "fixture count mismatch");
    if (v.pass) v.detail = std::to_string(fixtures.size()) + " evaluations reproduced, all non-closed";
    return v;
}

Verdict per_family(const std::function<props::Outcome(const TnormFamily&, std::uint64_t)>& run, double budget = 0.0) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    props::Outcome total;
    std::uint64_t seed = 1000;
    for (const auto& f : oracle::family_grid()) {
        const props::Outcome o = run(f, seed++);
        v.require(o.ok(), f.describe() + ": " + o.summary());
        total.merge(o);
    }
    const double elapsed = seconds_since(t0);
    if (budget > 0.0) v.require(elapsed < budget, "runtime " + fmt("%.1f", elapsed) + " s");
    if (v.pass) v.detail = total.summary() + ", " + fmt("%.1f", elapsed) + " s";
    return v;
}

Verdict closure_fuzz() {
    return per_family([](const TnormFamily& f, std::uint64_t seed) { return props::closure(f, 100000, seed); }, 60.0);
}

Verdict algebraic_laws() {
    return per_family([](const TnormFamily& f, std::uint64_t seed) {
        props::Outcome o = props::operation_laws(f, 1000, seed);
        o.merge(props::aggregation_laws(f, 1000, seed + 7));
        return o;
    });
}

Verdict order_suite() {
    Verdict v;
    const props::Outcome o = props::order_laws(10000, 77);
    v.require(o.ok(0.0), o.summary());
    const auto x = pfz::make_pfn(0.2, 0.2, 0.1), y = pfz::make_pfn(0.3, 0.0, 0.2);
    v.require(pfz::cmp_wang(x, y) == pfz::WangVerdict::Indistinguishable, "Wang order separates the pair");
    v.require(pfz::cmp_admissible(x, y) < 0, "admissible order does not put <0.2,0.2,0.1> strictly first");
    if (v.pass) v.detail = o.summary() + "; tied pair resolved to strict less";
    return v;
}

Verdict oracle_equivalence() {
    return per_family([](const TnormFamily& f, std::uint64_t seed) {
        props::Outcome o = props::closed_form_agreement(f, 1000, seed);
        o.merge(props::n_ary_agreement(f, 1000, seed + 3));
        return o;
    });
}

Verdict sweep_trends() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const pfz::DecisionProblem p = pfz::case_study();
    enum Trend { Down, Up, Unchecked };
    const struct {
        Family f;
        Operator op;
        double lo, hi;
        int steps;
        Trend trend;
    } sweeps[] = {
        {Family::SchweizerSklar, Operator::Pfiwa, -10, -1, 19, Down},
        {Family::Hamacher, Operator::Pfiwa, 1, 10, 19, Down},
        {Family::Frank, Operator::Pfiwa, 1.5, 10, 18, Unchecked},
        {Family::Frank, Operator::Pfiwg, 1.5, 10, 18, Unchecked},
        {Family::Dombi, Operator::Pfiwg, 1, 10, 19, Up},
        {Family::AczelAlsina, Operator::Pfiwa, 1, 10, 19, Up},
    };
    for (const auto& s : sweeps) {
        const std::string label = std::string(pfz::family_name(s.f)) + "/" + std::string(pfz::operator_name(s.op));
        const auto t = pfz::sweep_gamma(p, s.f, s.op, s.lo, s.hi, s.steps);
        std::size_t top = 0;
        while (top < t.alternatives.size() && t.alternatives[top] != "A2") ++top;
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            v.require(top < t.alternatives.size() && t.rows[i].ranks[top] == 1,
                      label + ": A2 not first at gamma=" + fmt("%g", t.rows[i].gamma));
            if (i == 0 || s.trend == Unchecked) continue;
            for (std::size_t a = 0; a < t.alternatives.size(); ++a) {
                const double d = t.rows[i].scores[a] - t.rows[i - 1].scores[a];
                const bool ok = s.trend == Down ? d <= 1e-9 : d >= -1e-9;
                v.require(ok, label + ": score of " + t.alternatives[a] + (s.trend == Down ? " rises" : " falls") +
                                  " by " + fmt("%.3g", std::fabs(d)) + " between gamma=" +
                                  fmt("%g", t.rows[i - 1].gamma) + " and gamma=" + fmt("%g", t.rows[i].gamma));
            }
        }
    }
    const double elapsed = seconds_since(t0);
    v.require(elapsed < 10.0, "runtime " + fmt("%.1f", elapsed) + " s");
    if (v.pass) v.detail = "all sweeps consistent, " + fmt("%.2f", elapsed) + " s";
    return v;
}

const std::vector<std::pair<const char*, Verdict (*)()>>& criteria() {
    static const std::vector<std::pair<const char*, Verdict (*)()>> list{
        {"case-study aggregates", case_study_aggregates},
        {"case-study scores and ranking", case_study_ranking},
        {"non-closure counterexamples", counterexamples},
        {"closure fuzzing", closure_fuzz},
        {"algebraic laws", algebraic_laws},
        {"admissible order", order_suite},
        {"closed-form and n-ary agreement", oracle_equivalence},
        {"gamma sweep trends", sweep_trends},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    const auto& list = criteria();
    if (only < 0 || only > static_cast<int>(list.size())) {
        std::fprintf(stderr, "criterion must be between 1 and %zu\n", list.size());
        return 2;
    }
    bool all = true;
    for (std::size_t n = 1; n <= list.size(); ++n) {
        if (only != 0 && static_cast<int>(n) != only) continue;
        Verdict v;
        try {
            v = list[n - 1].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %zu (%s): %s\n", v.pass ? "PASS" : "FAIL", n, list[n - 1].first, v.detail.c_str());
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
