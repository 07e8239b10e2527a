#include "hmw/analytic.hpp"
#include "hmw/radial_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hmw;

TEST(RadialOracle, EffectivePotentialValues)
{
    EXPECT_NEAR(effective_potential(0, presets::oscillator(), 1.0), 0.375, 1e-15);
    // a = 0.5, m = 1: alpha^2 = 1/4 cancels the Liouville term; constant -(m - a) omega = -0.5
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    EXPECT_NEAR(effective_potential(1, p, 1.0), 0.5 * 4.0 - 0.5, 1e-14);
    EXPECT_THROW(effective_potential(0, p, 0.0), ParameterError);
}

TEST(RadialOracle, LiouvilleStencilArithmetic)
{
    const PhysicalParams p = presets::oscillator();
    const GridSpec g{4.0, 3, 2};
    const auto t = build_radial_problem(0, p, g, Discretization::liouville);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_DOUBLE_EQ(t.step, 1.0);
    for(std::size_t i = 0; i < 3; ++i)
    {
        EXPECT_NEAR(t.diag[i] - effective_potential(0, p, static_cast<double>(i + 1)), 1.0, 1e-12);
    }
    EXPECT_EQ(t.offdiag, (std::vector<double>{-0.5, -0.5}));
}

TEST(RadialOracle, OscillatorLevels)
{
    const PhysicalParams p = presets::oscillator();
    EXPECT_NEAR(solve_levels(0, p, 1).eigenvalues[0], 1.0, 1e-6);
    EXPECT_NEAR(solve_levels(1, p, 1).eigenvalues[0], 2.0, 1e-6);
    const auto three = solve_levels(2, p, 3);
    EXPECT_NEAR(three.eigenvalues[2], 7.0, 1e-6);
}

TEST(RadialOracle, FluxHalfAboveBranch)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    EXPECT_NEAR(solve_levels(1, p, 1).eigenvalues[0], 2.5, 1e-6);
}

TEST(RadialOracle, RichardsonEstimateIsHonest)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.25);
    for(int m : {-2, 0, 1})
    {
        const auto lv = solve_levels(m, p, 3);
        for(int n = 0; n < 3; ++n)
        {
            const double err = std::fabs(lv.eigenvalues[n] - energy_full_exact({n, m}, p));
            EXPECT_LT(err, std::max(1e-9, 10.0 * lv.error_estimates[n])) << m << ' ' << n;
            // raw levels approach from a consistent side with ratio ~ 4
            const double d1 = lv.raw[1][n] - lv.raw[0][n];
            const double d2 = lv.raw[2][n] - lv.raw[1][n];
            if(std::fabs(d2) > 1e-9)
            {
                EXPECT_NEAR(d1 / d2, 4.0, 0.5) << m << ' ' << n;
            }
        }
        EXPECT_LT(lv.tail_mass, 1e-12);
    }
}

TEST(RadialOracle, LiouvilleVariantConvergesForLargeAlpha)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.25);
    OracleOptions opt;
    opt.discretization = Discretization::liouville;
    const auto lv = solve_levels(2, p, 2, opt);
    EXPECT_NEAR(lv.eigenvalues[0], energy_full_exact({0, 2}, p), 1e-6);
    EXPECT_NEAR(lv.eigenvalues[1], energy_full_exact({1, 2}, p), 1e-6);
}

TEST(RadialOracle, LiouvilleVariantIsSlowBelowHalf)
{
    // u = sqrt(r) R with |alpha| = 0: the u ~ sqrt(r) log r start spoils second order
    const PhysicalParams p = presets::natural();
    OracleOptions opt;
    opt.discretization = Discretization::liouville;
    const auto lv = solve_levels(0, p, 1, opt);
    const double d1 = lv.raw[1][0] - lv.raw[0][0];
    const double d2 = lv.raw[2][0] - lv.raw[1][0];
    EXPECT_LT(std::fabs(d1 / d2), 3.0);
}

TEST(RadialOracle, AdjudicationFlagsQuotedBranch)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    const auto rep = adjudicate(-1, p, 1);
    ASSERT_EQ(rep.rows.size(), 1u);
    EXPECT_NEAR(rep.rows[0].e_oracle, 6.5, 1e-6);
    EXPECT_FALSE(rep.rows[0].exact_flagged);
    EXPECT_TRUE(rep.rows[0].paper_flagged);
    EXPECT_GE(rep.rows[0].delta_paper(), 1.0);
}

TEST(RadialOracle, AdjudicationAgreesAboveFluxAndAtZeroFlux)
{
    for(double a : {0.0, 0.5})
    {
        const PhysicalParams p = presets::natural(2.0, 3.0, a);
        for(int m : {1, 2})
        {
            const auto rep = adjudicate(m, p, 2);
            EXPECT_FALSE(rep.any_exact_flagged());
            EXPECT_FALSE(rep.any_paper_flagged());
        }
    }
    const auto rep = adjudicate(-2, presets::natural(), 2);
    EXPECT_FALSE(rep.any_paper_flagged());
}

TEST(RadialOracle, MirroredConventionDisagrees)
{
    // the opposite cross-term sign places the m = -1 level at the mirrored energy, which the exact form misses
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    OracleOptions opt;
    opt.convention = CrossTerm::mirrored;
    const auto rep = adjudicate(-1, p, 1, opt);
    // alpha = m + a = -0.5: (1 + 0.5) 2 + (-0.5)(1) = 2.5
    EXPECT_NEAR(rep.rows[0].e_oracle, 2.5, 1e-6);
    EXPECT_TRUE(rep.rows[0].exact_flagged);
}

TEST(RadialOracle, ExplicitToleranceOverridesThreshold)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    const auto rep = adjudicate(-1, p, 1, {}, 10.0);
    EXPECT_FALSE(rep.any_paper_flagged());
}

TEST(RadialOracle, RejectsUnconfinedAndBadGrids)
{
    PhysicalParams free;
    EXPECT_THROW(solve_levels(0, free, 1), ParameterError);
    OracleOptions opt;
    opt.grid = GridSpec{5.0, 2, 3};
    EXPECT_THROW(solve_levels(0, presets::oscillator(), 1, opt), ParameterError);
    EXPECT_THROW(solve_levels(0, presets::oscillator(), 0), ParameterError);
}

TEST(RadialOracle, SmallBoxExpands)
{
    OracleOptions opt;
    opt.grid = GridSpec{2.0, 1000, 3};
    const auto lv = solve_levels(0, presets::oscillator(), 1, opt);
    EXPECT_GT(lv.grid_used.r_max, 2.0);
    EXPECT_NEAR(lv.eigenvalues[0], 1.0, 1e-6);
}
