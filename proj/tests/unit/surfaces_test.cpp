#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sextic/surface.hpp"

using namespace sextic;

TEST(Surfaces, AnnulusHasZeroChi) {
    EXPECT_EQ(euler_characteristic(CompactSurface::annulus()), 0);
    EXPECT_EQ(oracle::chi(CompactSurface::annulus()), 0);
}

TEST(Surfaces, SevenCrosscapsGiveMinusFive) {
    const auto k = SurfaceKind::normalize(3, 1);
    EXPECT_EQ(k, SurfaceKind::nonorientable(7));
    EXPECT_EQ(k.euler_characteristic(), -5);
    EXPECT_EQ(euler_characteristic(CubicAmbient::RP2_T3), -5);
}

TEST(Surfaces, PuncturedFiveCrosscapsAgainstCellOracle) {
    const CompactSurface s(SurfaceKind::nonorientable(5), 5);
    EXPECT_EQ(euler_characteristic(s), -8);
    EXPECT_EQ(oracle::chi(s), -8);
}

TEST(Surfaces, ChiMatchesCellOracleOnSmallSurfaces) {
    for (int g = 0; g <= 6; ++g)
        for (int k = 0; k <= 6; ++k) {
            const CompactSurface o(SurfaceKind::orientable(g), k);
            EXPECT_EQ(euler_characteristic(o), oracle::chi(o)) << to_string(o);
            if (g == 0) continue;
            const CompactSurface n(SurfaceKind::nonorientable(g), k);
            EXPECT_EQ(euler_characteristic(n), oracle::chi(n)) << to_string(n);
        }
}

TEST(Surfaces, NormalizeMixedPresentations) {
    EXPECT_EQ(SurfaceKind::normalize(3, 1), SurfaceKind::nonorientable(7));
    EXPECT_EQ(SurfaceKind::normalize(2, 0), SurfaceKind::orientable(2));
    EXPECT_EQ(SurfaceKind::normalize(1, 2), SurfaceKind::nonorientable(4));
    EXPECT_EQ(SurfaceKind::normalize(1, 2).euler_characteristic(), -2);
    for (int h = 0; h <= 5; ++h)
        for (int c = 0; c <= 5; ++c) {
            const auto k = SurfaceKind::normalize(h, c);
            EXPECT_EQ(k.euler_characteristic(), 2 - 2 * h - c);
            EXPECT_EQ(k.is_orientable(), c == 0);
        }
}

TEST(Surfaces, NonorientableNeedsACrosscap) {
    EXPECT_THROW(SurfaceKind::nonorientable(0), std::invalid_argument);
    EXPECT_THROW(SurfaceKind::orientable(-1), std::invalid_argument);
}

TEST(Surfaces, TokenExamples) {
    EXPECT_EQ(parse_surface("S2_2"), CompactSurface::annulus());
    EXPECT_EQ(parse_surface("7RP2"), CompactSurface(SurfaceKind::nonorientable(7), 0));
    EXPECT_EQ(parse_surface("3T2_2"), CompactSurface(SurfaceKind::orientable(3), 2));
    EXPECT_EQ(to_string(parse_surface("1T2")), "T2");
    EXPECT_EQ(to_string(parse_surface("1RP2_3")), "RP2_3");
}

TEST(Surfaces, TokenRoundTrip) {
    for (const char* t : {"S2", "S2_1", "T2", "T2_4", "2T2_3", "RP2", "RP2_1", "6RP2_2", "7RP2"})
        EXPECT_EQ(to_string(parse_surface(t)), t);
}

TEST(Surfaces, MalformedTokensReportPosition) {
    for (const char* t : {"", "X2", "S3", "0RP2", "RP2_", "T2_x", "2S2", "RP2_1 junk", "-1RP2"}) {
        EXPECT_THROW(parse_surface(t), ParseError) << t;
    }
    try {
        parse_surface("T2_x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(Surfaces, AmbientChiValuesAreOdd) {
    EXPECT_EQ(euler_characteristic(CubicAmbient::RP2), 1);
    EXPECT_EQ(euler_characteristic(CubicAmbient::RP2_S2), 3);
    EXPECT_EQ(euler_characteristic(CubicAmbient::RP2_T1), -1);
    EXPECT_EQ(euler_characteristic(CubicAmbient::RP2_T2), -3);
    for (auto a : all_ambients) {
        EXPECT_NE(euler_characteristic(a) % 2, 0);
        EXPECT_EQ(parse_ambient(to_string(a)), a);
    }
    EXPECT_FALSE(parse_ambient("9RP2"));
}
