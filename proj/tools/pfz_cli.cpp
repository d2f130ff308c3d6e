// pfz: ranking, gamma sweeps, closure audits and the bundled case study.
//
// Exit codes: 0 success, 2 usage or validation error, 1 internal
// inconsistency (a closed operation left the PFN domain).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfz/aggregators.hpp"
#include "pfz/error.hpp"
#include "pfz/legacy.hpp"
#include "pfz/mcdm.hpp"
#include "pfz/random.hpp"
#include "pfz/tnorm.hpp"

namespace {

using namespace pfz;

struct ProblemArgs {
    std::string input;
    std::string criteria;
    std::string kinds;
    std::string weights;
    std::string input_format = "auto";
};

struct FamilyArgs {
    std::string tnorm = "product";
    std::optional<double> gamma;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidProblem, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

DecisionProblem load_problem(const ProblemArgs& a) {
    const std::string text = read_file(a.input);
    const bool csv = a.input_format == "csv" || (a.input_format == "auto" && ends_with(a.input, ".csv"));
    if (!csv) return read_problem_json(text);
    if (!a.criteria.empty()) return read_problem_csv(text, read_file(a.criteria));
    if (a.weights.empty()) {
        throw Error(Errc::InvalidProblem, "CSV input needs --criteria FILE or --weights (and optionally --kinds)");
    }
    std::vector<double> w;
    for (const std::string& item : split_list(a.weights)) {
        char* stop = nullptr;
        const double v = std::strtod(item.c_str(), &stop);
        if (item.empty() || *stop != '\0') throw Error(Errc::InvalidWeights, "--weights entry '" + item + "' is not a number");
        w.push_back(v);
    }
    std::vector<CriterionKind> kinds(w.size(), CriterionKind::Benefit);
    if (!a.kinds.empty()) {
        kinds.clear();
        for (const std::string& item : split_list(a.kinds)) kinds.push_back(parse_criterion_kind(item));
    }
    return read_problem_csv(text, kinds, w);
}

TnormFamily make_family(const FamilyArgs& a) {
    try {
        return TnormFamily::make(parse_family_name(a.tnorm), a.gamma);
    } catch (const Error& e) {
        throw Error(e.code(), "--tnorm/--gamma: " + e.message());
    }
}

void add_problem_options(CLI::App* cmd, ProblemArgs& p) {
    cmd->add_option("--input", p.input, "Decision problem (JSON, or CSV with --criteria / --weights)")->required();
    cmd->add_option("--input-format", p.input_format, "auto|json|csv")
        ->check(CLI::IsMember({"auto", "json", "csv"}));
    cmd->add_option("--criteria", p.criteria, "Sidecar JSON with criterion kinds and weights (CSV input)");
    cmd->add_option("--weights", p.weights, "Comma-separated criterion weights (CSV input)");
    cmd->add_option("--kinds", p.kinds, "Comma-separated benefit|cost kinds (CSV input)");
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_report(const ClosureReport& r) {
    std::cout << r.operator_id << ',' << csv_quote(r.inputs) << ',' << format_number(r.output.a) << ','
              << format_number(r.output.b) << ',' << format_number(r.output.c) << ','
              << format_number(r.component_sum) << ',' << (r.is_pfn ? "true" : "false") << '\n';
}

// Fuzz inputs for one call of a registered operator.
OperatorCall sample_call(const OperatorInfo& info, PfnSampler& rng, const std::optional<TnormFamily>& generator,
                         const std::optional<double>& gamma, const std::optional<double>& lambda) {
    static const double kLambdas[] = {0.1, 0.5, 1.0, 2.0, 10.0};
    static const double kNaturalLambdas[] = {1.0, 2.0, 3.0, 5.0, 10.0};
    OperatorCall c;
    for (std::size_t k = 0; k < info.arity; ++k) c.operands.push_back(rng.mixed());
    if (info.uses_lambda) {
        const std::size_t pick = rng.engine()() % 5;
        c.lambda = lambda ? *lambda : (info.natural_lambda ? kNaturalLambdas[pick] : kLambdas[pick]);
    }
    if (info.uses_weights) {
        const double u = 0.05 + 0.9 * rng.unit();
        c.weights = {u, 1.0 - u};
    }
    for (std::size_t k = 0; k < info.exponents; ++k) c.exponents.push_back(0.1 + 1.9 * rng.unit());
    if (info.uses_generator) c.generator = generator;
    if (info.uses_gamma) {
        // Dombi laws need gamma >= 1; Hamacher accepts any positive gamma.
        c.gamma = gamma ? *gamma : 1.0 + 9.0 * rng.unit();
    }
    return c;
}

int cmd_rank(const ProblemArgs& p, const FamilyArgs& fa, const std::string& op, const std::string& format) {
    const DecisionProblem problem = load_problem(p);
    const RankingResult r = solve(problem, make_family(fa), parse_operator_name(op));
    std::cout << (format == "json" ? ranking_json(r) : ranking_csv(r));
    return 0;
}

int cmd_sweep(const ProblemArgs& p, const FamilyArgs& fa, const std::string& op, double gmin, double gmax,
              int steps) {
    const DecisionProblem problem = load_problem(p);
    Family fam;
    try {
        fam = parse_family_name(fa.tnorm);
    } catch (const Error& e) {
        throw Error(e.code(), "--tnorm: " + e.message());
    }
    SweepTable t;
    try {
        t = sweep_gamma(problem, fam, parse_operator_name(op), gmin, gmax, steps);
    } catch (const Error& e) {
        if (e.code() != Errc::ParamOutOfDomain) throw;
        throw Error(e.code(), "--gamma-min/--gamma-max/--steps: " + e.message());
    }
    std::cout << sweep_csv(t);
    return 0;
}

struct ClosureArgs {
    std::string op;
    bool bundled = false;
    std::optional<long long> samples;
    std::optional<unsigned long long> seed;
    std::optional<std::string> tnorm;
    std::optional<double> gamma;
    std::optional<double> lambda;
    bool violations_only = false;
    bool list = false;
};

int cmd_check_closure(const ClosureArgs& a) {
    if (a.list) {
        for (const std::string& id : registered_operators()) std::cout << id << '\n';
        return 0;
    }
    if (a.op.empty()) throw Error(Errc::UnknownOperator, "--operator is required (see --list)");
    const OperatorInfo info = operator_info(a.op);
    if (a.bundled == a.samples.has_value()) {
        throw Error(Errc::InvalidProblem, "give exactly one of --paper-examples or --samples N --seed S");
    }
    std::cout << "operator_id,inputs,a,b,c,sum,is_pfn\n";
    if (a.bundled) {
        for (const ClosureFixture& f : known_counterexamples(a.op)) {
            const ClosureReport r = closure_check(f.operator_id, f.call);
            if (!a.violations_only || !r.is_pfn) print_report(r);
        }
        return 0;
    }
    if (!a.seed) throw Error(Errc::InvalidProblem, "--samples requires --seed");
    if (*a.samples < 1) throw Error(Errc::InvalidProblem, "--samples must be positive");
    std::optional<TnormFamily> generator;
    if (a.tnorm) generator = make_family(FamilyArgs{*a.tnorm, a.gamma});
    PfnSampler rng(*a.seed);
    long long violations = 0;
    for (long long i = 0; i < *a.samples; ++i) {
        const ClosureReport r = closure_check(a.op, sample_call(info, rng, generator, a.gamma, a.lambda));
        if (!r.is_pfn) ++violations;
        if (!a.violations_only || !r.is_pfn) print_report(r);
    }
    std::cerr << a.op << ": " << violations << " of " << *a.samples << " outputs are not PFNs\n";
    return 0;
}

std::string triple_4dp(const Pfn& x) {
    return "<" + format_4dp(x.mu()) + ", " + format_4dp(x.eta()) + ", " + format_4dp(x.nu()) + ">";
}

int cmd_demo() {
    const DecisionProblem p = case_study();
    const TnormFamily f = TnormFamily::product();
    std::cout << "Case study: " << p.alternatives.size() << " alternatives, " << p.criteria.size()
              << " benefit criteria\n";
    std::cout << "Weights:";
    for (const Criterion& c : p.criteria) std::cout << ' ' << c.name << '=' << format_4dp(c.weight);
    std::cout << "\nT-norm: product, operator: pfiwa\n\n";

    std::cout << "Step 1: decision matrix (all criteria are benefits, so normalization leaves it unchanged)\n";
    auto emit_row = [](std::string head, const std::vector<std::string>& cells) {
        head.resize(4, ' ');
        for (std::size_t j = 0; j < cells.size(); ++j) {
            std::string cell = cells[j];
            if (j + 1 < cells.size()) cell.resize(26, ' ');
            head += cell;
        }
        std::cout << head << '\n';
    };
    std::vector<std::string> header;
    for (const Criterion& c : p.criteria) header.push_back(c.name);
    emit_row("", header);
    for (const Alternative& a : p.alternatives) {
        std::vector<std::string> cells;
        for (const Pfn& x : a.ratings) cells.push_back(triple_4dp(x));
        emit_row(a.name, cells);
    }

    const std::vector<Aggregate> aggs = aggregate(normalize(p), f, Operator::Pfiwa);
    std::cout << "\nStep 2: aggregated values\n";
    for (std::size_t i = 0; i < aggs.size(); ++i) {
        std::cout << "r" << i + 1 << " (" << aggs[i].name << ") = " << triple_4dp(aggs[i].value) << '\n';
    }
    std::cout << "\nStep 3: scores\n";
    for (std::size_t i = 0; i < aggs.size(); ++i) {
        std::cout << "S(r" << i + 1 << ") = " << format_4dp(score_profile(aggs[i].value).s) << '\n';
    }

    std::cout << "\nStep 4: ranking\n";
    const RankingResult r = rank(aggs);
    std::string line;
    for (const RankedAlternative& ra : r.rows) line += (line.empty() ? "" : " > ") + ra.name;
    std::cout << line << '\n';
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"Picture fuzzy aggregation and ranking toolkit"};
    app.require_subcommand(1);

    ProblemArgs problem;
    FamilyArgs family;
    std::string op = "pfiwa";
    std::string format = "csv";
    double gmin = 0.0, gmax = 0.0;
    int steps = 0;
    ClosureArgs closure;

    const std::vector<std::string> ops{"pfiwa", "pfiwg", "pfiowa", "pfiowg"};

    CLI::App* rank_cmd = app.add_subcommand("rank", "Aggregate and rank the alternatives of a decision problem");
    add_problem_options(rank_cmd, problem);
    rank_cmd->add_option("--tnorm", family.tnorm, "T-norm family");
    rank_cmd->add_option("--gamma", family.gamma, "Family parameter");
    rank_cmd->add_option("--op", op, "pfiwa|pfiwg|pfiowa|pfiowg");
    rank_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Scores and ranks over an evenly spaced gamma grid");
    add_problem_options(sweep_cmd, problem);
    sweep_cmd->add_option("--tnorm", family.tnorm, "Parametric t-norm family")->required();
    sweep_cmd->add_option("--op", op, "pfiwa|pfiwg|pfiowa|pfiowg");
    sweep_cmd->add_option("--gamma-min", gmin, "First grid point")->required();
    sweep_cmd->add_option("--gamma-max", gmax, "Last grid point")->required();
    sweep_cmd->add_option("--steps", steps, "Number of grid points (>= 2)")->required();

    CLI::App* closure_cmd = app.add_subcommand("check-closure", "Audit an operator for closure over PFNs");
    closure_cmd->add_option("--operator", closure.op, "Operator id (see --list)");
    closure_cmd->add_flag("--paper-examples", closure.bundled, "Run the bundled counterexamples");
    closure_cmd->add_option("--samples", closure.samples, "Number of random inputs");
    closure_cmd->add_option("--seed", closure.seed, "Random seed");
    closure_cmd->add_option("--tnorm", closure.tnorm, "Generator family for generator-based operators");
    closure_cmd->add_option("--gamma", closure.gamma, "Family or operator parameter");
    closure_cmd->add_option("--lambda", closure.lambda, "Fixed lambda for scalar/power operators");
    closure_cmd->add_flag("--violations-only", closure.violations_only, "Print only outputs that are not PFNs");
    closure_cmd->add_flag("--list", closure.list, "List the registered operator ids");

    CLI::App* demo_cmd = app.add_subcommand("demo", "Walk through the bundled case study");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::cerr << "pfz: error: " << msg << '\n';
        return 2;
    }

    if (rank_cmd->parsed()) return cmd_rank(problem, family, op, format);
    if (sweep_cmd->parsed()) return cmd_sweep(problem, family, op, gmin, gmax, steps);
    if (closure_cmd->parsed()) return cmd_check_closure(closure);
    if (demo_cmd->parsed()) return cmd_demo();
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pfz::Error& e) {
        std::cout.flush();
        std::cerr << "pfz: error: " << e.what() << '\n';
        return e.code() == pfz::Errc::InternalInconsistency ? 1 : 2;
    } catch (const std::exception& e) {
        std::cout.flush();
        std::cerr << "pfz: error: " << e.what() << '\n';
        return 1;
    }
}
