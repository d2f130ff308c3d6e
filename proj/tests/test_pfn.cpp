#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "pfz/error.hpp"
#include "pfz/pfn.hpp"
#include "pfz/random.hpp"

using pfz::Errc;
using pfz::make_pfn;
using pfz::Pfn;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const pfz::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no pfz::Error thrown";
    return Errc::InternalInconsistency;
}

}  // namespace

TEST(MakePfn, StoresComponentsUnmodified) {
    const Pfn x = make_pfn(0.5, 0.25, 0.25);
    EXPECT_EQ(x.mu(), 0.5);
    EXPECT_EQ(x.eta(), 0.25);
    EXPECT_EQ(x.nu(), 0.25);
    EXPECT_EQ(x.refusal(), 0.0);
    EXPECT_EQ(make_pfn(0, 0, 1), Pfn::bottom());
    EXPECT_EQ(make_pfn(1, 0, 0), Pfn::top());
}

TEST(MakePfn, RejectsSumAboveOne) {
    EXPECT_EQ(code_of([] { make_pfn(0.81, 0.125, 0.125); }), Errc::SumExceedsOne);
    EXPECT_EQ(code_of([] { make_pfn(13.0 / 16, 0.125, 0.125); }), Errc::SumExceedsOne);
}

TEST(MakePfn, AcceptsSumWithinSlack) {
    const Pfn x = make_pfn(0.5, 0.25, 0.25 + 5e-10);
    EXPECT_EQ(x.nu(), 0.25 + 5e-10);
    EXPECT_GE(x.refusal(), -pfz::kSumEps);
    EXPECT_EQ(code_of([] { make_pfn(0.5, 0.25, 0.25 + 2e-9); }), Errc::SumExceedsOne);
}

TEST(MakePfn, RejectsComponentOutOfRange) {
    EXPECT_EQ(code_of([] { make_pfn(-0.1, 0, 0); }), Errc::ComponentOutOfRange);
    EXPECT_EQ(code_of([] { make_pfn(0, 1.5, 0); }), Errc::ComponentOutOfRange);
    EXPECT_EQ(code_of([] { make_pfn(0, 0, NAN); }), Errc::ComponentOutOfRange);
}

TEST(ScoreProfile, Examples) {
    EXPECT_EQ(pfz::score_profile(Pfn::top()), (pfz::ScoreProfile{1, 1, 1}));
    const auto p = pfz::score_profile(make_pfn(0.2, 0.2, 0.1));
    EXPECT_NEAR(p.s, 0.1, 1e-15);
    EXPECT_NEAR(p.h1, 0.3, 1e-15);
    EXPECT_NEAR(p.h2, 0.5, 1e-15);
    EXPECT_NEAR(pfz::score_profile(make_pfn(0.4229, 0.2492, 0.2232)).s, 0.1997, 1e-12);
}

TEST(ScoreProfile, RoundTrip) {
    pfz::PfnSampler rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Pfn x = rng.mixed(0.2);
        const Pfn y = pfz::from_profile(pfz::score_profile(x));
        ASSERT_LE(oracle::max_abs_diff(x, y), 1e-12) << pfz::to_text(x);
    }
}

TEST(ScoreProfile, Bounds) {
    pfz::PfnSampler rng(12);
    for (int i = 0; i < 10000; ++i) {
        const auto p = pfz::score_profile(rng.mixed(0.2));
        ASSERT_LE(std::fabs(p.s), p.h1 + 1e-15);
        ASSERT_LE(p.h1, p.h2 + 1e-15);
        ASSERT_LE(p.h2, 1.0 + pfz::kSumEps);
    }
}

TEST(AdmissibleOrder, Examples) {
    EXPECT_LT(oracle::cmp(make_pfn(0.2, 0.2, 0.1), make_pfn(0.3, 0, 0.2)), 0);
    EXPECT_LT(oracle::cmp(Pfn::bottom(), Pfn::top()), 0);
    EXPECT_EQ(oracle::cmp(make_pfn(0.3, 0.1, 0.2), make_pfn(0.3, 0.1, 0.2)), 0);
}

TEST(AdmissibleOrder, DecimalNearTiesCompareByExactKeys) {
    // 0.2 - 0.1 and 0.3 - 0.2 differ in the last bit as doubles.
    EXPECT_LT(oracle::cmp(make_pfn(0.2, 0.2, 0.1), make_pfn(0.3, 0, 0.2)), 0);
    EXPECT_GT(oracle::cmp(make_pfn(0.3, 0, 0.2), make_pfn(0.2, 0.2, 0.1)), 0);
    EXPECT_LT(oracle::cmp(make_pfn(0.3, 0.1, 0.2), make_pfn(0.3, 0.2, 0.2)), 0);
}

TEST(AdmissibleOrder, Antisymmetric) {
    pfz::PfnSampler rng(13);
    for (int i = 0; i < 10000; ++i) {
        const Pfn x = rng.mixed(0.3);
        const Pfn y = rng.mixed(0.3);
        const auto xy = oracle::cmp(x, y);
        const auto yx = oracle::cmp(y, x);
        ASSERT_EQ(xy < 0, yx > 0);
        ASSERT_EQ(xy == 0, x == y);
    }
}

TEST(AdmissibleOrder, TieBrokenOnlyByIdenticalComponents) {
    // Profiles that agree in all three keys up to rounding still separate.
    const Pfn x = make_pfn(0.1, 0.2, 0.3);
    const Pfn y = pfz::from_profile(pfz::score_profile(x));
    EXPECT_EQ(oracle::cmp(x, y) == 0, x == y);
}

TEST(AdmissibleOrder, RefinesInclusion) {
    pfz::PfnSampler rng(14);
    for (int i = 0; i < 10000; ++i) {
        const auto [x, y] = rng.comparable_pair();
        ASSERT_TRUE(pfz::leq_componentwise(x, y));
        ASSERT_TRUE(oracle::cmp(x, y) <= 0 || oracle::cmp_lex_tol(x, y, 1e-9) == 0)
            << pfz::to_text(x) << " " << pfz::to_text(y);
    }
}

TEST(WangOrder, Examples) {
    using pfz::WangVerdict;
    EXPECT_EQ(pfz::cmp_wang(make_pfn(0.2, 0.2, 0.1), make_pfn(0.3, 0, 0.2)), WangVerdict::Indistinguishable);
    EXPECT_EQ(pfz::cmp_wang(Pfn::bottom(), Pfn::top()), WangVerdict::Less);
    EXPECT_EQ(pfz::cmp_wang(make_pfn(0.5, 0, 0), make_pfn(0.5, 0.2, 0)), WangVerdict::Less);
    EXPECT_EQ(pfz::cmp_wang(make_pfn(0.5, 0.2, 0), make_pfn(0.5, 0, 0)), WangVerdict::Greater);
}

TEST(InclusionOrder, Examples) {
    EXPECT_TRUE(pfz::leq_componentwise(make_pfn(0.1, 0.1, 0.5), make_pfn(0.2, 0.3, 0.4)));
    EXPECT_FALSE(pfz::leq_componentwise(Pfn::top(), make_pfn(0, 1, 0)));
    EXPECT_FALSE(pfz::leq_componentwise(make_pfn(0, 1, 0), Pfn::top()));
    const Pfn x = make_pfn(0.3, 0.3, 0.3);
    EXPECT_TRUE(pfz::leq_componentwise(x, x));
}

TEST(Lattice, JoinMeetExamples) {
    const std::vector<Pfn> a{Pfn::top(), make_pfn(0, 1, 0)};
    EXPECT_EQ(pfz::join_w(a), Pfn::top());
    const std::vector<Pfn> b{Pfn::bottom(), make_pfn(0.5, 0.2, 0.2), Pfn::top()};
    EXPECT_EQ(pfz::meet_w(b), Pfn::bottom());
    EXPECT_EQ(pfz::join_w(b), Pfn::top());
    const Pfn x = make_pfn(0.4, 0.1, 0.3);
    EXPECT_EQ(pfz::join_w(std::vector<Pfn>{x}), x);
    EXPECT_EQ(pfz::meet_w(std::vector<Pfn>{x}), x);
    EXPECT_EQ(code_of([] { pfz::join_w(std::vector<Pfn>{}); }), Errc::EmptyInput);
    EXPECT_EQ(code_of([] { pfz::meet_w(std::vector<Pfn>{}); }), Errc::EmptyInput);
}

TEST(Lattice, Laws) {
    pfz::PfnSampler rng(15);
    auto join2 = [](Pfn a, Pfn b) { return pfz::join_w(std::vector<Pfn>{a, b}); };
    auto meet2 = [](Pfn a, Pfn b) { return pfz::meet_w(std::vector<Pfn>{a, b}); };
    for (int i = 0; i < 2000; ++i) {
        const Pfn x = rng.mixed(), y = rng.mixed(), z = rng.mixed();
        ASSERT_EQ(join2(x, x), x);
        ASSERT_EQ(meet2(x, x), x);
        ASSERT_EQ(join2(x, y), join2(y, x));
        ASSERT_EQ(meet2(x, y), meet2(y, x));
        ASSERT_EQ(join2(join2(x, y), z), join2(x, join2(y, z)));
        ASSERT_EQ(meet2(meet2(x, y), z), meet2(x, meet2(y, z)));
        ASSERT_EQ(join2(x, meet2(x, y)), x);
    }
}

TEST(Text, RoundTrip) {
    pfz::PfnSampler rng(16);
    for (int i = 0; i < 1000; ++i) {
        const Pfn x = rng.mixed();
        ASSERT_EQ(pfz::parse_text(pfz::to_text(x)), x);
    }
    EXPECT_EQ(pfz::parse_text(" < 0.5 , 0.25, 0.25 > "), make_pfn(0.5, 0.25, 0.25));
    EXPECT_EQ(code_of([] { pfz::parse_text("<0.5,0.25>"); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { pfz::parse_text("0.5,0.25,0.25"); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { pfz::parse_text("<0.5,x,0.25>"); }), Errc::ParseError);
    EXPECT_EQ(code_of([] { pfz::parse_text("<0.9,0.25,0.25>"); }), Errc::SumExceedsOne);
}

TEST(Sampler, ReproducibleAndValid) {
    pfz::PfnSampler a(99), b(99);
    for (int i = 0; i < 1000; ++i) {
        const Pfn x = a.mixed(0.5);
        ASSERT_EQ(x, b.mixed(0.5));
        ASSERT_LE(x.mu() + x.eta() + x.nu(), 1.0 + pfz::kSumEps);
    }
}

TEST(AdmissibleOrder, Transitive) {
    pfz::PfnSampler rng(17);
    for (int i = 0; i < 10000; ++i) {
        const Pfn x = rng.mixed(0.3), y = rng.mixed(0.3), z = rng.mixed(0.3);
        const auto xy = oracle::cmp(x, y);
        const auto yz = oracle::cmp(y, z);
        const auto xz = oracle::cmp(x, z);
        if (xy <= 0 && yz <= 0) {
            ASSERT_LE(xz, 0);
        }
        if (xy >= 0 && yz >= 0) {
            ASSERT_GE(xz, 0);
        }
    }
}
