#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "knotadj.hpp"
#include "oracles.hpp"

using namespace knotadj;

namespace {

const SeifertMatrix trefoil{{-1, 1}, {0, -1}};

// rational == integer recurses forever under C++20 rewritten operators in this Boost; compare rationals only
using Q = boost::rational<long long>;

LaurentPoly P(const char* s) { return parse_laurent(s); }

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "(no error)";
}

TargetInvariants unknot_target() { return target_from_diagram("unknot", PlanarDiagram{}); }

PlanarDiagram trefoil_diagram() { return braid_to_pd(parse_braid("braid 2: 1 1 1")); }

AdjacencyPresentation trefoil_one_site(TargetInvariants target) {
    return {"3_1", trefoil_diagram().with_sites({TwistSite{{0}, 1}}), std::move(target), 1};
}

}  // namespace

TEST(VerifyAdjacency, TrefoilToUnknotPasses) {
    const AdjacencyCertificate c = verify_adjacency(trefoil_one_site(unknot_target()));
    EXPECT_EQ(c.verdict, Verdict::pass);
    ASSERT_EQ(c.records.size(), 1u);
    EXPECT_EQ(c.records[0].subset, (std::vector<std::size_t>{1}));
    EXPECT_EQ(c.records[0].alexander, LaurentPoly(1));
    EXPECT_EQ(c.records[0].jones, LaurentPoly(1));
    EXPECT_TRUE(c.records[0].match);
    EXPECT_EQ(c.level, "diagram");
    EXPECT_NE(c.scope.find("not an isotopy proof"), std::string::npos);
    ASSERT_TRUE(c.distinctness.has_value());
    EXPECT_EQ(c.distinctness->invariant, "jones");
}

TEST(VerifyAdjacency, TargetTrefoilFails) {
    const AdjacencyCertificate c = verify_adjacency(trefoil_one_site(target_from_diagram("3_1", trefoil_diagram())));
    EXPECT_EQ(c.verdict, Verdict::fail);
    ASSERT_EQ(c.records.size(), 1u);
    EXPECT_FALSE(c.records[0].match);
    EXPECT_EQ(c.records[0].note, "Alexander polynomial differs");
    EXPECT_FALSE(c.distinctness.has_value());
}

TEST(VerifyAdjacency, TwoSitesThreeSubsets) {
    const PlanarDiagram d = trefoil_diagram().with_sites({TwistSite{{0}, 1}, TwistSite{{1}, 1}});
    const AdjacencyCertificate c = verify_adjacency({"3_1", d, unknot_target(), 2});
    EXPECT_EQ(c.verdict, Verdict::pass);
    ASSERT_EQ(c.records.size(), 3u);
    EXPECT_EQ(c.records[0].subset, (std::vector<std::size_t>{1}));
    EXPECT_EQ(c.records[1].subset, (std::vector<std::size_t>{2}));
    EXPECT_EQ(c.records[2].subset, (std::vector<std::size_t>{1, 2}));
}

TEST(VerifyAdjacency, MatrixLevelTwoSitesThreeSubsets) {
    auto [checks, cert] = verify_family_subsets(trefoil, {2, 2});
    EXPECT_EQ(cert.verdict, Verdict::pass);
    EXPECT_EQ(cert.records.size(), 3u);
    EXPECT_EQ(cert.level, "matrix");
    for (const auto& c : checks) {
        EXPECT_TRUE(c.replays_to_base);
        EXPECT_TRUE(c.alexander_equal);
    }
    EXPECT_EQ(checks[2].q, (std::vector<Integer>{0, 0}));
    EXPECT_EQ(checks[0].q, (std::vector<Integer>{0, 2}));
}

TEST(VerifyAdjacency, SiteCountMismatch) {
    AdjacencyPresentation p = trefoil_one_site(unknot_target());
    p.n = 2;
    EXPECT_NE(message_of([&] { verify_adjacency(p); }).find("twist sites"), std::string::npos);
    p.n = 0;
    EXPECT_THROW(verify_adjacency(p), input_error);
}

TEST(VerifyAdjacency, InconsistentTarget) {
    TargetInvariants t = unknot_target();
    t.determinant = 3;
    EXPECT_NE(message_of([&] { verify_adjacency(trefoil_one_site(t)); }).find("determinant"), std::string::npos);
}

TEST(VerifyAdjacency, CapExceeded) {
    const std::string msg = message_of([] { verify_adjacency(trefoil_one_site(unknot_target()), 2); });
    EXPECT_NE(msg.find("--max-crossings"), std::string::npos) << msg;
}

TEST(VerifyAdjacency, AlexanderOnlyTargetCannotHideJonesMismatch) {
    // Jones omitted from the target: PASS on the Alexander polynomial alone
    TargetInvariants weak{"unknot", LaurentPoly(1), std::nullopt, 1};
    EXPECT_EQ(verify_adjacency(trefoil_one_site(weak)).verdict, Verdict::pass);
    // a Jones value that no subset reaches turns it into FAIL
    weak.jones = kauffman_jones(trefoil_diagram()).poly;
    const auto c = verify_adjacency(trefoil_one_site(weak));
    EXPECT_EQ(c.verdict, Verdict::fail);
    EXPECT_EQ(c.records[0].note, "Jones polynomial differs");
}

TEST(VerifyAdjacency, CertificateIdStable) {
    const auto a = verify_adjacency(trefoil_one_site(unknot_target()));
    const auto b = verify_adjacency(trefoil_one_site(unknot_target()));
    EXPECT_EQ(a.id(), b.id());
    EXPECT_EQ(a.id().size(), 16u);
    const auto c = verify_adjacency(trefoil_one_site(target_from_diagram("3_1", trefoil_diagram())));
    EXPECT_NE(a.id(), c.id());
}

TEST(Subsets, CanonicalOrder) {
    const auto s = nonempty_subsets(3);
    const std::vector<std::vector<std::size_t>> expected{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    EXPECT_EQ(s, expected);
    EXPECT_EQ(nonempty_subsets(6).size(), 63u);
    EXPECT_TRUE(nonempty_subsets(0).empty());
}

TEST(GenerateFamily, TrefoilThree) {
    const FamilyReport f = generate_family(trefoil, 3, {2, 2, 2});
    EXPECT_EQ(f.member.size(), 8u);
    EXPECT_EQ(f.member_invariants.alexander, P("1 - t + t^2"));
    EXPECT_EQ(f.surface_genus, 4);
    EXPECT_EQ(f.base_surface_genus, 1);
    EXPECT_TRUE(f.alexander_equal && f.signature_equal && f.determinant_equal && f.reduction_replays);
    EXPECT_TRUE(f.some_twist_exceeds_one);
    EXPECT_EQ(f.member, block_extend(trefoil, {2, 2, 2}));
    EXPECT_EQ(f.member_invariants.alexander, oracle::alexander_by_interpolation(f.member.entries()));
}

TEST(GenerateFamily, DefaultTwistsAreTwo) {
    EXPECT_EQ(generate_family(trefoil, 3).member, block_extend(trefoil, {2, 2, 2}));
}

TEST(GenerateFamily, UnknotCompanion) {
    const FamilyReport f = generate_family(SeifertMatrix{}, 1, {2});
    EXPECT_EQ(f.member, (SeifertMatrix{{0, 0}, {1, 2}}));
    EXPECT_EQ(f.member_invariants.alexander, LaurentPoly(1));
}

TEST(GenerateFamily, ZeroTwistDestabilizes) {
    const FamilyReport f = generate_family(trefoil, 1, {0});
    EXPECT_EQ(apply_move(f.member, Destabilize{2}), trefoil);
    EXPECT_EQ(f.reduction.moves.size(), 1u);
    EXPECT_FALSE(f.some_twist_exceeds_one);
    EXPECT_NE(f.rationale.back().find("|q_i| > 1"), std::string::npos);
}

TEST(GenerateFamily, Errors) {
    EXPECT_THROW(generate_family(trefoil, 0), input_error);
    EXPECT_THROW(generate_family(trefoil, 2, {2}), input_error);
    EXPECT_THROW(generate_family(SeifertMatrix{{1, 0}, {0, 1}}, 1), input_error);
}

TEST(BoundCheck, Examples) {
    const auto a = bound_check(9, GenusInterval{{1}, 1});
    EXPECT_FALSE(a.feasible);
    EXPECT_EQ(a.required, Q(2));
    EXPECT_NE(a.message.find("needs genus >= 2 "), std::string::npos) << a.message;

    const auto b = bound_check(2, GenusInterval{{1}, 1});
    EXPECT_TRUE(b.feasible);
    EXPECT_EQ(b.interval.lower, Q(1));
    EXPECT_EQ(b.interval.upper, 1);
    EXPECT_EQ(b.required, Q(5, 6));

    const auto c = bound_check(15, GenusInterval{{1}, 4});
    EXPECT_TRUE(c.feasible);
    EXPECT_EQ(c.interval.lower, Q(3));
    EXPECT_EQ(c.interval.upper, 4);
}

TEST(BoundCheck, RationalLowerKept) {
    const auto d = bound_check(4, GenusInterval{{0}, 3});
    EXPECT_EQ(d.interval.lower, Q(7, 6));
}

TEST(AdjacencyJson, CertificateShape) {
    const auto j = json::from_adjacency(verify_adjacency(trefoil_one_site(unknot_target())));
    EXPECT_EQ(j["verdict"], "PASS");
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["records"][0]["subset"], json::Json::array({1}));
    EXPECT_EQ(j["records"][0]["alexander"], "1");
    EXPECT_EQ(j["distinctness"]["invariant"], "jones");
}
