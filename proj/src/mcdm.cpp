#include "pfz/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pfz/error.hpp"
#include "pfz/interact.hpp"

namespace pfz {

using nlohmann::json;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_4dp(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

CriterionKind parse_criterion_kind(std::string_view s) {
    if (s == "benefit") return CriterionKind::Benefit;
    if (s == "cost") return CriterionKind::Cost;
    throw Error(Errc::InvalidProblem, "criterion kind '" + std::string(s) + "' is neither benefit nor cost");
}

std::string_view criterion_kind_name(CriterionKind k) noexcept {
    return k == CriterionKind::Benefit ? "benefit" : "cost";
}

void DecisionProblem::validate() const {
    if (criteria.empty()) throw Error(Errc::InvalidProblem, "no criteria");
    if (alternatives.empty()) throw Error(Errc::InvalidProblem, "no alternatives");
    std::set<std::string> seen;
    for (const Criterion& c : criteria) {
        if (c.name.empty()) throw Error(Errc::InvalidProblem, "criterion with an empty name");
        if (!seen.insert(c.name).second) throw Error(Errc::InvalidProblem, "duplicate criterion '" + c.name + "'");
    }
    seen.clear();
    for (const Alternative& a : alternatives) {
        if (a.name.empty()) throw Error(Errc::InvalidProblem, "alternative with an empty name");
        if (!seen.insert(a.name).second) throw Error(Errc::InvalidProblem, "duplicate alternative '" + a.name + "'");
        if (a.ratings.size() != criteria.size()) {
            throw Error(Errc::InvalidProblem, "alternative '" + a.name + "' has " + std::to_string(a.ratings.size()) +
                                                  " ratings for " + std::to_string(criteria.size()) + " criteria");
        }
    }
    weights();
}

Weights DecisionProblem::weights() const {
    std::vector<double> w;
    for (const Criterion& c : criteria) w.push_back(c.weight);
    try {
        return Weights(std::move(w));
    } catch (const Error& e) {
        // Name the criterion instead of its position.
        std::string msg = e.message();
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            const std::string tag = "weight " + std::to_string(j + 1) + " ";
            if (msg.rfind(tag, 0) == 0) msg = "weight of criterion '" + criteria[j].name + "' " + msg.substr(tag.size());
        }
        throw Error(e.code(), msg);
    }
}

DecisionProblem normalize(const DecisionProblem& p) {
    DecisionProblem out = p;
    for (std::size_t j = 0; j < out.criteria.size(); ++j) {
        if (out.criteria[j].kind != CriterionKind::Cost) continue;
        for (Alternative& a : out.alternatives) {
            if (j < a.ratings.size()) a.ratings[j] = complement(a.ratings[j]);
        }
        out.criteria[j].kind = CriterionKind::Benefit;
    }
    return out;
}

std::vector<Aggregate> aggregate(const DecisionProblem& p, const TnormFamily& f, Operator op) {
    p.validate();
    const Weights w = p.weights();
    std::vector<Aggregate> out;
    out.reserve(p.alternatives.size());
    for (const Alternative& a : p.alternatives) out.push_back({a.name, aggregate_with(op, f, w, a.ratings)});
    return out;
}

RankingResult rank(const std::vector<Aggregate>& aggregates) {
    if (aggregates.empty()) throw Error(Errc::EmptyInput, "nothing to rank");
    std::vector<std::size_t> order(aggregates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cmp_admissible(aggregates[a].value, aggregates[b].value) > 0;
    });
    RankingResult r;
    int pos = 0;
    for (std::size_t i : order) {
        const Aggregate& a = aggregates[i];
        r.rows.push_back({a.name, a.value, score_profile(a.value), ++pos});
    }
    return r;
}

RankingResult solve(const DecisionProblem& p, const TnormFamily& f, Operator op) {
    RankingResult r = rank(aggregate(normalize(p), f, op));
    r.family = f;
    r.op = op;
    return r;
}

SweepTable sweep_gamma(const DecisionProblem& p, Family family, Operator op, double gamma_min, double gamma_max,
                       int steps) {
    if (steps < 2) throw Error(Errc::ParamOutOfDomain, "a sweep needs at least 2 steps, got " + std::to_string(steps));
    if (!TnormFamily::takes_parameter(family)) {
        throw Error(Errc::ParamOutOfDomain, std::string(family_name(family)) + " has no gamma to sweep");
    }
    if (!(gamma_min < gamma_max)) {
        throw Error(Errc::ParamOutOfDomain, "gamma range [" + format_number(gamma_min) + ", " +
                                                format_number(gamma_max) + "] is empty");
    }
    std::vector<TnormFamily> grid;
    for (int i = 0; i < steps; ++i) {
        const double g = i == steps - 1 ? gamma_max : gamma_min + (gamma_max - gamma_min) * i / (steps - 1);
        grid.push_back(TnormFamily::make(family, g));
    }
    const DecisionProblem norm = normalize(p);
    SweepTable t;
    for (const Alternative& a : norm.alternatives) t.alternatives.push_back(a.name);
    for (const TnormFamily& f : grid) {
        const std::vector<Aggregate> aggs = aggregate(norm, f, op);
        const RankingResult r = rank(aggs);
        SweepRow row;
        row.gamma = *f.gamma();
        row.scores.resize(aggs.size());
        row.ranks.resize(aggs.size());
        for (std::size_t i = 0; i < aggs.size(); ++i) row.scores[i] = score_profile(aggs[i].value).s;
        for (const RankedAlternative& ra : r.rows) {
            const auto it = std::find(t.alternatives.begin(), t.alternatives.end(), ra.name);
            row.ranks[static_cast<std::size_t>(it - t.alternatives.begin())] = ra.rank;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

DecisionProblem case_study() {
    DecisionProblem p;
    const double w[] = {0.2, 0.3, 0.1, 0.4};
    for (int j = 0; j < 4; ++j) p.criteria.push_back({"G" + std::to_string(j + 1), CriterionKind::Benefit, w[j]});
    const double table[6][4][3] = {
        {{0.6, 0.1, 0.2}, {0.5, 0.3, 0.1}, {0.5, 0.1, 0.3}, {0.2, 0.3, 0.4}},
        {{0.4, 0.4, 0.1}, {0.6, 0.3, 0.1}, {0.5, 0.2, 0.2}, {0.7, 0.1, 0.2}},
        {{0.2, 0.2, 0.3}, {0.6, 0.2, 0.1}, {0.4, 0.1, 0.3}, {0.4, 0.3, 0.3}},
        {{0.5, 0.1, 0.2}, {0.4, 0.2, 0.1}, {0.2, 0.2, 0.5}, {0.3, 0.2, 0.2}},
        {{0.2, 0.2, 0.2}, {0.5, 0.2, 0.1}, {0.3, 0.2, 0.3}, {0.6, 0.2, 0.1}},
        {{0.6, 0.1, 0.3}, {0.1, 0.2, 0.6}, {0.1, 0.3, 0.5}, {0.2, 0.3, 0.2}},
    };
    for (int i = 0; i < 6; ++i) {
        Alternative a{"A" + std::to_string(i + 1), {}};
        for (int j = 0; j < 4; ++j) a.ratings.push_back(make_pfn(table[i][j][0], table[i][j][1], table[i][j][2]));
        p.alternatives.push_back(std::move(a));
    }
    return p;
}

// ---------------------------------------------------------------------------
// I/O

namespace {

json parse_json(std::string_view text, std::string_view what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, std::string(what) + " is not valid JSON: " + e.what());
    }
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw Error(Errc::InvalidProblem, where + " is missing \"" + key + "\"");
    }
    return obj.at(key);
}

double number_at(const json& v, const std::string& where) {
    if (!v.is_number()) throw Error(Errc::InvalidProblem, where + " must be a number");
    return v.get<double>();
}

std::string string_at(const json& v, const std::string& where) {
    if (!v.is_string()) throw Error(Errc::InvalidProblem, where + " must be a string");
    return v.get<std::string>();
}

// Re-raises a Pfn validation failure with the cell location in front.
template <class F>
auto at_cell(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.code(), where + ": " + e.message());
    }
}

Pfn pfn_at(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) throw Error(Errc::InvalidProblem, where + " must be [mu, eta, nu]");
    const double mu = number_at(v[0], where + "[0]");
    const double eta = number_at(v[1], where + "[1]");
    const double nu = number_at(v[2], where + "[2]");
    return at_cell(where, [&] { return make_pfn(mu, eta, nu); });
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = line.find(sep, start);
        std::string cell(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        const auto b = cell.find_first_not_of(" \t");
        const auto e = cell.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

double csv_number(const std::string& cell, const std::string& where) {
    char* stop = nullptr;
    const double v = std::strtod(cell.c_str(), &stop);
    if (cell.empty() || *stop != '\0') throw Error(Errc::ParseError, where + ": '" + cell + "' is not a number");
    return v;
}

}  // namespace

DecisionProblem read_problem_json(std::string_view text) {
    const json doc = parse_json(text, "problem file");
    DecisionProblem p;
    const json& crit = member(doc, "criteria", "problem");
    if (!crit.is_array()) throw Error(Errc::InvalidProblem, "\"criteria\" must be an array");
    for (std::size_t j = 0; j < crit.size(); ++j) {
        const std::string where = "criteria[" + std::to_string(j) + "]";
        Criterion c;
        c.name = string_at(member(crit[j], "name", where), where + ".name");
        c.kind = crit[j].contains("kind") ? parse_criterion_kind(string_at(crit[j]["kind"], where + ".kind"))
                                          : CriterionKind::Benefit;
        c.weight = number_at(member(crit[j], "weight", where), where + ".weight");
        p.criteria.push_back(std::move(c));
    }
    const json& alts = member(doc, "alternatives", "problem");
    if (!alts.is_array()) throw Error(Errc::InvalidProblem, "\"alternatives\" must be an array");
    for (std::size_t i = 0; i < alts.size(); ++i) {
        const std::string where = "alternatives[" + std::to_string(i) + "]";
        Alternative a;
        a.name = string_at(member(alts[i], "name", where), where + ".name");
        const json& ratings = member(alts[i], "ratings", where);
        if (!ratings.is_array()) throw Error(Errc::InvalidProblem, where + ".ratings must be an array");
        for (std::size_t j = 0; j < ratings.size(); ++j) {
            const std::string cell = a.name + " / " +
                                     (j < p.criteria.size() ? p.criteria[j].name : "rating " + std::to_string(j + 1));
            a.ratings.push_back(pfn_at(ratings[j], cell));
        }
        p.alternatives.push_back(std::move(a));
    }
    p.validate();
    return p;
}

std::string write_problem_json(const DecisionProblem& p) {
    json doc;
    doc["criteria"] = json::array();
    for (const Criterion& c : p.criteria) {
        doc["criteria"].push_back({{"name", c.name}, {"kind", criterion_kind_name(c.kind)}, {"weight", c.weight}});
    }
    doc["alternatives"] = json::array();
    for (const Alternative& a : p.alternatives) {
        json r = json::array();
        for (const Pfn& x : a.ratings) r.push_back({x.mu(), x.eta(), x.nu()});
        doc["alternatives"].push_back({{"name", a.name}, {"ratings", r}});
    }
    return doc.dump(2) + "\n";
}

DecisionProblem read_problem_csv(std::string_view text, const std::vector<CriterionKind>& kinds,
                                 const std::vector<double>& weights) {
    const std::vector<std::string> lines = lines_of(text);
    if (lines.empty()) throw Error(Errc::ParseError, "CSV input is empty");
    const std::vector<std::string> header = split(lines[0], ',');
    if (header.size() < 4 || (header.size() - 1) % 3 != 0 || header[0] != "name") {
        throw Error(Errc::ParseError, "CSV header must be name,<G>_mu,<G>_eta,<G>_nu,...");
    }
    const std::size_t m = (header.size() - 1) / 3;
    DecisionProblem p;
    static const char* const suffix[] = {"_mu", "_eta", "_nu"};
    for (std::size_t j = 0; j < m; ++j) {
        std::string name;
        for (int k = 0; k < 3; ++k) {
            const std::string& h = header[1 + 3 * j + k];
            const std::string sfx = suffix[k];
            if (h.size() <= sfx.size() || h.compare(h.size() - sfx.size(), sfx.size(), sfx) != 0) {
                throw Error(Errc::ParseError, "CSV header column '" + h + "' should end in " + sfx);
            }
            const std::string base = h.substr(0, h.size() - sfx.size());
            if (k == 0) name = base;
            else if (base != name) throw Error(Errc::ParseError, "CSV header column '" + h + "' breaks the " + name + " triple");
        }
        p.criteria.push_back({name, CriterionKind::Benefit, 0.0});
    }
    if (kinds.size() != m || weights.size() != m) {
        throw Error(Errc::InvalidProblem, "CSV has " + std::to_string(m) + " criteria but " +
                                              std::to_string(kinds.size()) + " kinds and " +
                                              std::to_string(weights.size()) + " weights were given");
    }
    for (std::size_t j = 0; j < m; ++j) {
        p.criteria[j].kind = kinds[j];
        p.criteria[j].weight = weights[j];
    }
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::vector<std::string> cells = split(lines[r], ',');
        const std::string row = "CSV row " + std::to_string(r + 1);
        if (cells.size() != header.size()) {
            throw Error(Errc::ParseError, row + " has " + std::to_string(cells.size()) + " cells, expected " +
                                              std::to_string(header.size()));
        }
        Alternative a{cells[0], {}};
        for (std::size_t j = 0; j < m; ++j) {
            double v[3];
            for (int k = 0; k < 3; ++k) v[k] = csv_number(cells[1 + 3 * j + k], row + " (" + a.name + "), column " + header[1 + 3 * j + k]);
            a.ratings.push_back(at_cell(a.name + " / " + p.criteria[j].name, [&] { return make_pfn(v[0], v[1], v[2]); }));
        }
        p.alternatives.push_back(std::move(a));
    }
    p.validate();
    return p;
}

DecisionProblem read_problem_csv(std::string_view text, std::string_view sidecar_json) {
    const json doc = parse_json(sidecar_json, "criteria sidecar");
    const json& crit = member(doc, "criteria", "criteria sidecar");
    if (!crit.is_array()) throw Error(Errc::InvalidProblem, "sidecar \"criteria\" must be an array");
    std::vector<CriterionKind> kinds;
    std::vector<double> weights;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < crit.size(); ++j) {
        const std::string where = "sidecar criteria[" + std::to_string(j) + "]";
        kinds.push_back(crit[j].contains("kind") ? parse_criterion_kind(string_at(crit[j]["kind"], where + ".kind"))
                                                 : CriterionKind::Benefit);
        weights.push_back(number_at(member(crit[j], "weight", where), where + ".weight"));
        names.push_back(crit[j].contains("name") ? string_at(crit[j]["name"], where + ".name") : std::string());
    }
    DecisionProblem p = read_problem_csv(text, kinds, weights);
    for (std::size_t j = 0; j < names.size(); ++j) {
        if (!names[j].empty() && names[j] != p.criteria[j].name) {
            throw Error(Errc::InvalidProblem, "sidecar criterion '" + names[j] + "' does not match CSV column group '" +
                                                  p.criteria[j].name + "'");
        }
    }
    return p;
}

std::string ranking_csv(const RankingResult& r) {
    std::string out = "rank,name,mu,eta,nu,score,h1,h2\n";
    for (const RankedAlternative& a : r.rows) {
        out += std::to_string(a.rank) + "," + a.name + "," + format_number(a.aggregated.mu()) + "," +
               format_number(a.aggregated.eta()) + "," + format_number(a.aggregated.nu()) + "," +
               format_number(a.profile.s) + "," + format_number(a.profile.h1) + "," + format_number(a.profile.h2) +
               "\n";
    }
    return out;
}

std::string ranking_json(const RankingResult& r) {
    json doc;
    if (r.family) {
        doc["tnorm"] = {{"family", family_name(r.family->tag())}};
        if (r.family->gamma()) doc["tnorm"]["gamma"] = *r.family->gamma();
    }
    if (r.op) doc["op"] = operator_name(*r.op);
    doc["ranking"] = json::array();
    for (const RankedAlternative& a : r.rows) {
        doc["ranking"].push_back({{"rank", a.rank},
                                  {"name", a.name},
                                  {"aggregate", {a.aggregated.mu(), a.aggregated.eta(), a.aggregated.nu()}},
                                  {"score", a.profile.s},
                                  {"h1", a.profile.h1},
                                  {"h2", a.profile.h2}});
    }
    return doc.dump(2) + "\n";
}

RankingResult read_ranking_json(std::string_view text) {
    const json doc = parse_json(text, "ranking");
    std::vector<Aggregate> aggs;
    const json& rows = member(doc, "ranking", "ranking document");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "ranking[" + std::to_string(i) + "]";
        aggs.push_back({string_at(member(rows[i], "name", where), where + ".name"),
                        pfn_at(member(rows[i], "aggregate", where), where + ".aggregate")});
    }
    RankingResult r = rank(aggs);
    if (doc.contains("tnorm")) {
        const json& t = doc["tnorm"];
        std::optional<double> g;
        if (t.contains("gamma")) g = number_at(t["gamma"], "tnorm.gamma");
        r.family = TnormFamily::make(parse_family_name(string_at(member(t, "family", "tnorm"), "tnorm.family")), g);
    }
    if (doc.contains("op")) r.op = parse_operator_name(string_at(doc["op"], "op"));
    return r;
}

std::string sweep_csv(const SweepTable& t) {
    std::string out = "gamma";
    for (const std::string& a : t.alternatives) out += "," + a + "_score";
    for (const std::string& a : t.alternatives) out += "," + a + "_rank";
    out += "\n";
    for (const SweepRow& row : t.rows) {
        out += format_number(row.gamma);
        for (double s : row.scores) out += "," + format_number(s);
        for (int k : row.ranks) out += "," + std::to_string(k);
        out += "\n";
    }
    return out;
}

}  // namespace pfz
