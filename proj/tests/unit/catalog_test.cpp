#include <gtest/gtest.h>

#include <set>

#include "sextic/catalog.hpp"
#include "sextic/enumerator.hpp"

using namespace sextic;

namespace {

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& list, const Scheme& s) {
    for (const auto& e : list)
        if (e.scheme == s) return &e;
    return nullptr;
}

Scheme pair_on(CubicAmbient a, const char* code) { return Scheme::from_pair(a, parse_pair(code)); }

}  // namespace

TEST(GroundTruth, Sizes) {
    EXPECT_EQ(ground_truth(CubicAmbient::RP2_S2).size(), 31u);
    EXPECT_EQ(ground_truth(CubicAmbient::RP2).size(), 17u);
    EXPECT_EQ(ground_truth(CubicAmbient::RP2_T3).size(), 157u);
    EXPECT_EQ(ground_truth(CubicAmbient::RP2_T2).size(), 113u);
    EXPECT_EQ(ground_truth(CubicAmbient::RP2_T1).size(), 58u);
}

TEST(GroundTruth, NoDuplicateEntries) {
    for (auto a : all_ambients) {
        std::set<std::string> seen;
        for (const auto& e : ground_truth(a)) EXPECT_TRUE(seen.insert(to_string(e.scheme)).second) << to_string(e.scheme);
    }
}

TEST(GroundTruth, WorkedSmoothingExample) {
    const auto list = ground_truth(CubicAmbient::RP2_T3);
    const auto* e = find_entry(list, pair_on(CubicAmbient::RP2_T3, "<3 u S2_2, 0 u 5RP2_5>"));
    ASSERT_NE(e, nullptr);
    ASSERT_TRUE(e->construction);
    EXPECT_EQ(e->construction->method, ConstructionMethod::QuarticConicSmoothing);
    EXPECT_EQ(e->construction->source, "(12387456)[0]");
}

TEST(GroundTruth, PlaneSectionsOnTwoComponentCubic) {
    const auto list = ground_truth(CubicAmbient::RP2_S2);
    const auto* e = find_entry(list, parse_scheme("<3 u 1<1>>@RP2 | <>@S2", CubicAmbient::RP2_S2));
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->construction->method, ConstructionMethod::PlaneSectionsPerturbation);
}

TEST(GroundTruth, CollapseConstructions) {
    const auto list = ground_truth(CubicAmbient::RP2_T3);
    const auto* gudkov = find_entry(list, pair_on(CubicAmbient::RP2_T3, "<0 u 2RP2_5, 4 u 5RP2_1>"));
    ASSERT_NE(gudkov, nullptr);
    EXPECT_EQ(gudkov->construction->method, ConstructionMethod::GudkovCurveCollapse);
    const auto* other = find_entry(list, pair_on(CubicAmbient::RP2_T3, "<4 u 6RP2_1, 0 u RP2_5>"));
    ASSERT_NE(other, nullptr);
    EXPECT_EQ(other->construction->method, ConstructionMethod::GudkovCurveCollapse);
    const auto* collapse = find_entry(list, pair_on(CubicAmbient::RP2_T3, "<S2_3, 2 u 7RP2_1>"));
    ASSERT_NE(collapse, nullptr);
    EXPECT_EQ(collapse->construction->method, ConstructionMethod::OvalCollapse);
    EXPECT_EQ(collapse->construction->source, "<6 u 1<2>>");
}

TEST(GroundTruth, EveryEntryAdmittedAndConsistent) {
    for (auto a : all_ambients)
        for (const auto& e : ground_truth(a)) {
            EXPECT_TRUE(evaluate(e.scheme).admitted()) << to_string(e.scheme);
            EXPECT_LE(b0(e.scheme), harnack_bound);
            EXPECT_FALSE(colorings(e.scheme).empty()) << to_string(e.scheme);
            if (!has_positive_chi(a)) EXPECT_TRUE(e.construction) << to_string(e.scheme);
            if (e.construction && e.construction->method == ConstructionMethod::QuarticConicSmoothing &&
                e.construction->source)
                EXPECT_TRUE(is_polotovskii_code(*e.construction->source)) << *e.construction->source;
        }
}

TEST(GroundTruth, PolotovskiiGrammar) {
    EXPECT_TRUE(is_polotovskii_code("(12387456)[0]"));
    EXPECT_TRUE(is_polotovskii_code("(1845)(23)(67)[0]"));
    EXPECT_TRUE(is_polotovskii_code("(12)(34)(56)(78)"));
    EXPECT_FALSE(is_polotovskii_code("12387456[0]"));
    EXPECT_FALSE(is_polotovskii_code("(1239)[0]"));
    EXPECT_FALSE(is_polotovskii_code("(123)[10]"));
    EXPECT_FALSE(is_polotovskii_code(""));
}

TEST(Closure, CoversEveryNegativeAmbient) {
    for (auto a : {CubicAmbient::RP2_T3, CubicAmbient::RP2_T2, CubicAmbient::RP2_T1}) {
        const auto r = closure_check(a);
        EXPECT_TRUE(r.uncovered.empty()) << to_string(a);
        EXPECT_TRUE(r.overreach.empty()) << to_string(a);
        EXPECT_EQ(r.covered, ground_truth(a).size());
    }
}

TEST(Closure, SphereAndFourCrosscapFamilies) {
    auto covered_in = [](SurfaceKind big) {
        std::vector<Scheme> admitted;
        for (const auto& s : classify(CubicAmbient::RP2_T3).admitted)
            if (classify_shape(s).params && classify_shape(s).params->big == big) admitted.push_back(s);
        const auto r = closure_check(CubicAmbient::RP2_T3, admitted);
        return std::make_pair(r.covered, r.uncovered.size());
    };
    EXPECT_EQ(covered_in(SurfaceKind::sphere()), std::make_pair(std::size_t{28}, std::size_t{0}));
    EXPECT_EQ(covered_in(SurfaceKind::nonorientable(4)), std::make_pair(std::size_t{25}, std::size_t{0}));
}

TEST(Closure, MissingTableEntryIsReported) {
    // a scheme outside every table cell stays uncovered
    const auto extra = Scheme::from_pair(CubicAmbient::RP2_T3,
                                         family_pair(CubicAmbient::RP2_T3, SurfaceKind::sphere(), 0, 3, 1));
    const auto r = closure_check(CubicAmbient::RP2_T3, {extra});
    EXPECT_EQ(r.uncovered.size(), 1u);
}

TEST(Closure, ReducedTablesExist) {
    EXPECT_FALSE(construction_table(CubicAmbient::RP2_T2).smoothings.empty());
    EXPECT_FALSE(construction_table(CubicAmbient::RP2_T1).smoothings.empty());
    EXPECT_THROW(construction_table(CubicAmbient::RP2), std::invalid_argument);
}

TEST(Verify, AllAmbientsPass) {
    for (auto a : all_ambients) {
        const auto r = verify(a);
        EXPECT_TRUE(r.ok()) << to_string(a);
        EXPECT_EQ(r.admitted, r.expected);
    }
}

TEST(Verify, InjectedRuleIsCaught) {
    auto rules = standard_rules();
    rules.push_back({"INJECTED", "rejects every curve with four components", [](const Scheme& s) {
                         return RuleCheck{true, b0(s) != 4, ""};
                     }});
    const auto r = verify(CubicAmbient::RP2, rules);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.missing.empty());
    EXPECT_TRUE(r.extra.empty());
    for (const auto& s : r.missing) EXPECT_EQ(b0(s), 4);
}

TEST(Verify, DroppedRuleShowsExtras) {
    RuleSet rules;
    for (const auto& r : standard_rules())
        if (r.id != "T3-RKGK") rules.push_back(r);
    const auto r = verify(CubicAmbient::RP2_T3, rules);
    EXPECT_EQ(r.extra.size(), 6u);
    EXPECT_TRUE(r.missing.empty());
}
