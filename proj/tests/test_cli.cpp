#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "pfz/mcdm.hpp"

namespace {

struct Invocation {
    int status = -1;
    std::string out;
};

// Runs the CLI with the given arguments; stderr is appended to stdout when merge is set.
Invocation run(const std::string& args, bool merge = false) {
    const std::string cmd = std::string("\"") + PFZ_CLI_PATH + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
    Invocation r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> v;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            v.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    v.push_back(cur);
    return v;
}

const std::string kJson = std::string("--input \"") + PFZ_DATA_DIR + "/casestudy.json\"";

}  // namespace

TEST(Cli, DemoPrintsAggregatesAndRanking) {
    const Invocation r = run("demo");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("r2 (A2) = <0.6046, 0.2314, 0.1414>"), std::string::npos);
    EXPECT_NE(r.out.find("r6 (A6) = <0.2700, 0.2466, 0.3305>"), std::string::npos);
    EXPECT_NE(r.out.find("S(r6) = -0.0605"), std::string::npos);
    EXPECT_NE(r.out.find("A2 > A5 > A3 > A1 > A4 > A6"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
    EXPECT_EQ(run("demo").out, run("demo").out);
    const std::string args = "rank " + kJson + " --tnorm dombi --gamma 3 --op pfiowg --format json";
    EXPECT_EQ(run(args).out, run(args).out);
    const std::string audit = "check-closure --operator wei-pfwa --samples 500 --seed 11";
    EXPECT_EQ(run(audit, true).out, run(audit, true).out);
}

TEST(Cli, RankCsv) {
    const Invocation r = run("rank " + kJson);
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 7u);
    EXPECT_EQ(ls[0], "rank,name,mu,eta,nu,score,h1,h2");
    std::vector<std::string> order;
    for (std::size_t i = 1; i < ls.size(); ++i) order.push_back(split(ls[i])[1]);
    EXPECT_EQ(order, (std::vector<std::string>{"A2", "A5", "A3", "A1", "A4", "A6"}));
    EXPECT_NEAR(std::stod(split(ls[1])[5]), 0.4632, 5e-5);
}

TEST(Cli, RankCsvInputWithSidecar) {
    const std::string dir = PFZ_DATA_DIR;
    const Invocation r = run("rank --input \"" + dir + "/casestudy.csv\" --criteria \"" + dir + "/casestudy.criteria.json\"");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, run("rank " + kJson).out);
    const Invocation flags = run("rank --input \"" + dir + "/casestudy.csv\" --weights 0.2,0.3,0.1,0.4");
    EXPECT_EQ(flags.status, 0);
    EXPECT_EQ(flags.out, r.out);
}

TEST(Cli, RankJsonRoundTrips) {
    const Invocation r = run("rank " + kJson + " --tnorm hamacher --gamma 2 --format json");
    ASSERT_EQ(r.status, 0);
    const pfz::RankingResult back = pfz::read_ranking_json(r.out);
    const pfz::RankingResult direct = pfz::solve(
        pfz::case_study(), pfz::TnormFamily::make(pfz::Family::Hamacher, 2.0), pfz::Operator::Pfiwa);
    ASSERT_EQ(back.rows.size(), direct.rows.size());
    for (std::size_t i = 0; i < back.rows.size(); ++i) {
        EXPECT_EQ(back.rows[i].name, direct.rows[i].name);
        EXPECT_EQ(back.rows[i].aggregated, direct.rows[i].aggregated);
    }
    EXPECT_EQ(back.rows.front().name, "A2");
}

TEST(Cli, DomainErrorsExitWithTwo) {
    const Invocation frank = run("rank " + kJson + " --tnorm frank --gamma 1", true);
    EXPECT_EQ(frank.status, 2);
    EXPECT_NE(frank.out.find("ParamOutOfDomain"), std::string::npos);
    EXPECT_EQ(run("sweep " + kJson + " --tnorm dombi --gamma-min 1 --gamma-max 10 --steps 1").status, 2);
    EXPECT_EQ(run("rank " + kJson + " --tnorm schweizer-sklar --gamma 0.5").status, 2);
    EXPECT_EQ(run("rank " + kJson + " --tnorm product --gamma 2").status, 2);
    const Invocation unknown = run("check-closure --operator no-such-op", true);
    EXPECT_EQ(unknown.status, 2);
    EXPECT_NE(unknown.out.find("UnknownOperator"), std::string::npos);
    EXPECT_EQ(run("rank --input /nonexistent/problem.json").status, 2);
}

TEST(Cli, SweepTable) {
    const Invocation r = run("sweep " + kJson + " --tnorm schweizer-sklar --gamma-min -10 --gamma-max -1 --steps 19");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 20u);
    EXPECT_EQ(split(ls[0]).size(), 13u);
    EXPECT_EQ(std::stod(split(ls[1])[0]), -10.0);
    EXPECT_EQ(std::stod(split(ls[19])[0]), -1.0);
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_EQ(split(ls[i])[8], "1") << ls[i];
}

TEST(Cli, ClosureAuditOfCounterexamples) {
    const Invocation wei = run("check-closure --operator wei-pfwg --paper-examples");
    ASSERT_EQ(wei.status, 0);
    auto ls = lines(wei.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0], "operator_id,inputs,a,b,c,sum,is_pfn");
    auto cells = split(ls[1]);
    EXPECT_EQ(cells.back(), "false");
    EXPECT_NEAR(std::stod(cells[cells.size() - 2]), 1.4, 1e-12);

    const Invocation lin = run("check-closure --operator lin-iol-add --paper-examples");
    ASSERT_EQ(lin.status, 0);
    ls = lines(lin.out);
    ASSERT_GE(ls.size(), 2u);
    cells = split(ls[1]);
    EXPECT_EQ(cells.back(), "false");
    EXPECT_NEAR(std::stod(cells[cells.size() - 2]), 1.5, 1e-12);
}

TEST(Cli, InteractionalLawsStayClosed) {
    for (const char* op : {"interactional-add", "interactional-mul"}) {
        const Invocation r = run(std::string("check-closure --operator ") + op + " --samples 100000 --seed 7 --violations-only",
                          true);
        ASSERT_EQ(r.status, 0);
        EXPECT_NE(r.out.find(std::string(op) + ": 0 of 100000 outputs are not PFNs"), std::string::npos) << r.out;
    }
}

TEST(Cli, ClosureListNamesEveryOperator) {
    const Invocation r = run("check-closure --list");
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls.size(), 38u);
    EXPECT_NE(std::find(ls.begin(), ls.end(), "wei-pfwg"), ls.end());
    EXPECT_NE(std::find(ls.begin(), ls.end(), "interactional-add"), ls.end());
}
