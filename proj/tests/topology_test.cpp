#include "builders.hpp"
#include "generators.hpp"
#include "ivhfs/error.hpp"
#include "ivhfs/workspace.hpp"

#include <gtest/gtest.h>

using namespace ivhfs;
using ivhfs::testing::Gen;
using ivhfs::testing::hfe;
using ivhfs::testing::iv;

namespace {

constexpr OrderProfile kCw = OrderProfile::Componentwise;
constexpr OrderProfile kRank = OrderProfile::RankSelect;
constexpr OrderProfile kBoth[] = {kCw, kRank};

Workspace fixture(std::string_view name) { return load_workspace(fixture_path(name)); }

ContextPtr cell_context() {
    return std::make_shared<const Context>(std::vector<std::string>{"h1"}, std::vector<std::string>{"e1"});
}

SoftSet cell(const ContextPtr& ctx, Ivhfe e) { return SoftSet(ctx, {SoftRow{std::move(e)}}); }

Family single(const ContextPtr& ctx, const std::string& name, const SoftSet& s) {
    return Family(ctx, {{"phi", null_set(ctx)}, {"E", absolute_set(ctx)}, {name, s}});
}

} // namespace

TEST(Validate, RankProfileAcceptsTau) {
    Workspace ws = fixture("example_3_5");
    EXPECT_TRUE(validate_topology(ws.topology("tau"), kRank).valid());
}

TEST(Validate, ComponentwiseRejectsTauAtE1H2) {
    Workspace ws = fixture("example_3_5");
    TopologyReport report = validate_topology(ws.topology("tau"), kCw);
    ASSERT_EQ(report.violations.size(), 2u);
    EXPECT_EQ(report.violations[0].axiom, Axiom::MeetClosed);
    const Violation& join = report.violations[1];
    EXPECT_EQ(join.axiom, Axiom::JoinClosed);
    EXPECT_EQ(join.operands, (std::vector<std::string>{"F_A", "G_B"}));
    ASSERT_TRUE(join.nearest.has_value());
    EXPECT_EQ(join.nearest->member, 2u);
    EXPECT_EQ(join.nearest->difference.parameter, 0u);
    EXPECT_EQ(join.nearest->difference.object, 1u);
    EXPECT_EQ(join.nearest->difference.position, 2u);
    EXPECT_EQ(join.witness.cell(0, 1)[2], iv("0.5", "0.8"));
}

TEST(Validate, IndiscreteAndMissingAxioms) {
    auto ctx = cell_context();
    Family indiscrete(ctx, {{"phi", null_set(ctx)}, {"E", absolute_set(ctx)}});
    SoftSet a = cell(ctx, hfe({{"0.2", "0.4"}}));
    SoftSet b = cell(ctx, hfe({{"0.3", "0.3"}}));
    for (auto p : kBoth) {
        EXPECT_TRUE(validate_topology(indiscrete, p).valid());
        TopologyReport missing = validate_topology(Family(ctx, {{"A", a}, {"B", b}}), p);
        ASSERT_GE(missing.violations.size(), 2u);
        EXPECT_EQ(missing.violations[0].axiom, Axiom::ContainsPhi);
        EXPECT_EQ(missing.violations[1].axiom, Axiom::ContainsE);
    }
    EXPECT_EQ(to_string(Axiom::MeetClosed), "meet-closed");
    EXPECT_EQ(to_string(Axiom::JoinClosed), "join-closed");
    EXPECT_EQ(to_string(Axiom::ContainsPhi), "contains-phi");
    EXPECT_EQ(to_string(Axiom::ContainsE), "contains-E");
}

TEST(Validate, GeneratedTopologiesValidate) {
    Gen g(41);
    for (int i = 0; i < 200; ++i) {
        for (auto p : kBoth) {
            Family t = g.topology_or_retry(g.context(), p);
            ASSERT_TRUE(validate_topology(t, p).valid());
        }
    }
}

TEST(Family, RejectsDuplicateNamesAndNormalizes) {
    Workspace ws = fixture("example_3_5");
    auto ctx = ws.context();
    EXPECT_THROW(Family(ctx, {{"A", ws.set("F_A")}, {"A", ws.set("G_B")}}), Error);
    Family t = ws.topology("tau");
    EXPECT_TRUE(t.members()[3].set.is_normalized());
    EXPECT_EQ(t.find(normalize(ws.set("G_B")), kRank), std::optional<std::size_t>(3));
}

TEST(ClosedSets, ComplementsOfMembers) {
    Workspace ws = fixture("example_3_5");
    Family tau = ws.topology("tau");
    auto closed = closed_members(tau);
    ASSERT_EQ(closed.size(), 4u);
    EXPECT_EQ(closed[0].name, "phi^C");
    EXPECT_EQ(closed[0].set, absolute_set(ws.context()));
    EXPECT_EQ(closed[1].set, null_set(ws.context()));
    EXPECT_EQ(closed[2].set, ws.set("printed_F_A_C"));
    // The printed G_B^C repeats [1,1] at e3; equal up to repetition.
    EXPECT_TRUE(ss_equal(closed[3].set, ws.set("printed_G_B_C"), kCw));
    for (auto p : kBoth) {
        EXPECT_TRUE(is_closed(tau, ws.set("printed_G_B_C"), p));
        EXPECT_TRUE(is_open(tau, null_set(ws.context()), p));
        EXPECT_TRUE(is_closed(tau, null_set(ws.context()), p));
        EXPECT_TRUE(is_open(tau, absolute_set(ws.context()), p));
        EXPECT_TRUE(is_closed(tau, absolute_set(ws.context()), p));
    }
}

TEST(Closure, Examples) {
    Workspace ws = fixture("example_3_5");
    Family tau = ws.topology("tau");
    SoftSet cl = closure(tau, ws.set("I_C"), kCw);
    EXPECT_TRUE(ss_equal(cl, ws.set("printed_G_B_C"), kCw));
    for (auto p : kBoth) {
        EXPECT_TRUE(ss_equal(closure(tau, null_set(ws.context()), p), null_set(ws.context()), p));
        EXPECT_TRUE(ss_equal(closure(tau, absolute_set(ws.context()), p), absolute_set(ws.context()), p));
        EXPECT_TRUE(ss_equal(closure(tau, ws.set("printed_F_A_C"), p), ws.set("printed_F_A_C"), p));
    }
}

TEST(Closure, FallsBackToAbsoluteWithoutClosedSupersets) {
    auto ctx = cell_context();
    SoftSet a = cell(ctx, hfe({{"0.2", "0.4"}}));
    // phi is absent, so E is not closed and nothing contains a.
    Family family(ctx, {{"A", cell(ctx, hfe({{"0.9", "0.9"}}))}});
    EXPECT_EQ(closure(family, a, kCw), absolute_set(ctx));
    EXPECT_EQ(interior(family, a, kCw), null_set(ctx));
}

TEST(Interior, Examples) {
    Workspace ws = fixture("example_3_5");
    Family tau = ws.topology("tau");
    for (auto p : kBoth) {
        SoftSet in = interior(tau, ws.set("I_C_int"), p);
        EXPECT_TRUE(ss_equal(in, ws.set("printed_G_B_normalized"), p));
        EXPECT_TRUE(ss_equal(interior(tau, null_set(ws.context()), p), null_set(ws.context()), p));
        EXPECT_TRUE(ss_equal(interior(tau, absolute_set(ws.context()), p), absolute_set(ws.context()), p));
        EXPECT_TRUE(ss_equal(interior(tau, ws.set("G_B"), p), normalize(ws.set("G_B")), p));
    }
}

TEST(Compare, Examples) {
    Workspace ws = fixture("example_3_5");
    for (auto p : kBoth) {
        EXPECT_EQ(compare_topologies(ws.topology("tau1"), ws.topology("tau2"), p), TopologyRelation::Coarser);
        EXPECT_EQ(compare_topologies(ws.topology("tau2"), ws.topology("tau1"), p), TopologyRelation::Finer);
        EXPECT_EQ(compare_topologies(ws.topology("tau"), ws.topology("tau"), p), TopologyRelation::Equal);
    }
    auto ctx = cell_context();
    Family f = single(ctx, "F", cell(ctx, hfe({{"0.2", "0.4"}})));
    Family g = single(ctx, "G", cell(ctx, hfe({{"0.6", "0.7"}})));
    EXPECT_EQ(compare_topologies(f, g, kCw), TopologyRelation::Incomparable);
    EXPECT_EQ(to_string(TopologyRelation::Coarser), "coarser");
}

TEST(Intersect, KeepsCommonMembers) {
    Workspace ws = fixture("example_3_5");
    std::vector<Family> same{ws.topology("tau"), ws.topology("tau")};
    EXPECT_EQ(compare_topologies(intersect_topologies(same, kRank), ws.topology("tau"), kRank),
              TopologyRelation::Equal);
    auto ctx = cell_context();
    std::vector<Family> two{single(ctx, "F", cell(ctx, hfe({{"0.2", "0.4"}}))),
                            single(ctx, "G", cell(ctx, hfe({{"0.6", "0.7"}})))};
    Family meet = intersect_topologies(two, kCw);
    EXPECT_EQ(meet.size(), 2u);
    EXPECT_TRUE(validate_topology(meet, kCw).valid());
}

TEST(Intersect, RankProfileOfRandomTopologiesValidates) {
    Gen g(42);
    for (int i = 0; i < 200; ++i) {
        ContextPtr ctx = g.context();
        SoftSet shared = g.full_set(ctx);
        auto t1 = ivhfs::testing::close_family(ctx, {shared, g.full_set(ctx)}, kRank, 24);
        auto t2 = ivhfs::testing::close_family(ctx, {shared, g.full_set(ctx)}, kRank, 24, "N");
        if (!t1 || !t2) {
            continue;
        }
        std::vector<Family> both{*t1, *t2};
        ASSERT_TRUE(validate_topology(intersect_topologies(both, kRank), kRank).valid());
    }
}

TEST(SoftPoint, Recognition) {
    Workspace ws = fixture("example_3_19_to_3_26");
    auto point = as_point(ws.set("F_A"));
    ASSERT_TRUE(point.has_value());
    EXPECT_EQ(point->at, 1u);
    EXPECT_FALSE(as_point(null_set(ws.context())).has_value());
    EXPECT_FALSE(as_point(ws.set("G_B")).has_value());
    EXPECT_EQ(restrict_to(ws.set("G_B"), 1).cell(1, 0), ws.set("G_B").cell(1, 0));
    EXPECT_TRUE(restrict_to(ws.set("G_B"), 1).cell(0, 0).is_null());
    EXPECT_TRUE(as_point(restrict_to(ws.set("G_B"), 1)).has_value());
}

TEST(SoftPoint, Membership) {
    Workspace ws = fixture("example_3_19_to_3_26");
    auto point = *as_point(ws.set("F_A"));
    for (auto p : kBoth) {
        EXPECT_TRUE(point_in(point, ws.set("G_B"), p));
        EXPECT_TRUE(point_in(point, absolute_set(ws.context()), p));
        EXPECT_FALSE(point_in(point, null_set(ws.context()), p));
    }
}

TEST(Neighborhood, OfPoint) {
    Workspace ws = fixture("example_3_19_to_3_26");
    Family tau = ws.topology("tau");
    auto point = *as_point(ws.set("F_A"));
    for (auto p : kBoth) {
        auto r = is_nbd_of_point(tau, ws.set("I_C"), point, p);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.witness, "G_B");
        EXPECT_TRUE(is_nbd_of_point(tau, absolute_set(ws.context()), point, p).holds);
        EXPECT_FALSE(is_nbd_of_point(tau, null_set(ws.context()), point, p).holds);
    }
}

TEST(Neighborhood, SystemOverPool) {
    Workspace ws = fixture("example_3_19_to_3_26");
    Family tau = ws.topology("tau");
    auto point = *as_point(ws.set("F_A"));
    std::vector<SoftSet> members;
    for (const auto& m : tau.members()) {
        members.push_back(m.set);
    }
    EXPECT_EQ(nbd_system(tau, point, members, kCw), (std::vector<bool>{false, true, true}));
    EXPECT_TRUE(nbd_system(tau, point, {}, kCw).empty());
    auto pool = default_set_pool(tau);
    EXPECT_EQ(pool.size(), 6u);
    EXPECT_EQ(pool[5].name, "G_B^C");
}

TEST(Neighborhood, OfSet) {
    Workspace ws = fixture("example_3_19_to_3_26");
    Family tau = ws.topology("tau");
    for (auto p : kBoth) {
        EXPECT_TRUE(is_nbd_of_set(tau, absolute_set(ws.context()), ws.set("H_A"), p).holds);
        auto self = is_nbd_of_set(tau, ws.set("I_C"), ws.set("G_B"), p);
        EXPECT_TRUE(self.holds);
        EXPECT_EQ(self.witness, "G_B");
    }
}

TEST(Neighborhood, PrintedSetIsNotBelowItsWitness) {
    // The printed H_A holds {[0.1,0.5]} at (e1,h1), while G_B holds
    // {[0.2,0.3],[0.1,0.9]}. Padded, [0.1,0.5] meets [0.2,0.3] at k = 1
    // and loses on either reading, so G_B cannot witness I_C for H_A.
    Workspace ws = fixture("example_3_19_to_3_26");
    Ivhfe h = ws.set("H_A").cell(0, 0);
    Ivhfe g = ws.set("G_B").cell(0, 0);
    EXPECT_EQ(h, hfe({{"0.1", "0.5"}}));
    EXPECT_EQ(g, hfe({{"0.2", "0.3"}, {"0.1", "0.9"}}));
    for (auto p : kBoth) {
        EXPECT_FALSE(hfe_leq(h, g, p));
        EXPECT_FALSE(ss_subset(normalize(ws.set("H_A")), ws.set("G_B"), p));
    }
}

TEST(Neighborhood, ContextMismatch) {
    Workspace ws = fixture("example_3_19_to_3_26");
    auto other = cell_context();
    EXPECT_THROW(is_nbd_of_set(ws.topology("tau"), null_set(other), null_set(other), kCw), Error);
}
