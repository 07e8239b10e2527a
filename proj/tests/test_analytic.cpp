#include "hmw/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hmw;

TEST(Analytic, NaturalPresetValues)
{
    const PhysicalParams p = presets::natural();
    EXPECT_DOUBLE_EQ(energy_full_paper({0, 0}, p), 2.0);
    EXPECT_DOUBLE_EQ(energy_full_exact({0, 0}, p), 2.0);
    EXPECT_DOUBLE_EQ(energy_full_exact({0, 1}, p), 3.0);
    EXPECT_DOUBLE_EQ(energy_full_exact({0, -1}, p), 5.0);
    EXPECT_DOUBLE_EQ(energy_full_exact({1, 0}, p), 6.0);
}

TEST(Analytic, BranchesDisagreeBelowTheFlux)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    EXPECT_DOUBLE_EQ(energy_full_exact({0, -1}, p), 6.5);
    EXPECT_DOUBLE_EQ(energy_full_paper({0, -1}, p), 4.5);
    EXPECT_DOUBLE_EQ(energy_full_exact({0, 1}, p), 2.5);
    EXPECT_DOUBLE_EQ(energy_full_paper({0, 1}, p), 2.5);
}

TEST(Analytic, BranchesAgreeWhenMAboveFlux)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0.0, 0.999);
    for(int i = 0; i < 100; ++i)
    {
        const PhysicalParams p = presets::natural(2.0, 3.0, ua(rng));
        for(int n = 0; n <= 3; ++n)
        {
            for(int m = 1; m <= 4; ++m)
            {
                EXPECT_NEAR(energy_full_paper({n, m}, p), energy_full_exact({n, m}, p), 1e-12);
            }
        }
    }
}

TEST(Analytic, ZeroFluxBranchesCoincide)
{
    const PhysicalParams p = presets::natural(1.3, 0.7, 0.0);
    for(int n = 0; n <= 3; ++n)
    {
        for(int m = -3; m <= 3; ++m)
        {
            EXPECT_DOUBLE_EQ(energy_full_paper({n, m}, p), energy_full_exact({n, m}, p));
        }
    }
}

TEST(Analytic, SpectralFlowOverOneFluxUnit)
{
    // a -> a + 1 maps level (n, m) onto (n, m + 1)
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(-2.0, 2.0);
    for(int i = 0; i < 50; ++i)
    {
        const double a = ua(rng);
        const PhysicalParams p = presets::natural(2.0, 3.0, a);
        const PhysicalParams q = presets::natural(2.0, 3.0, a + 1.0);
        for(int n = 0; n <= 2; ++n)
        {
            for(int m = -3; m <= 3; ++m)
            {
                EXPECT_NEAR(energy_full_exact({n, m + 1}, q), energy_full_exact({n, m}, p), 1e-11);
            }
        }
    }
}

TEST(Analytic, RadialSpacingIsTwoHbarOmega)
{
    PhysicalParams p;
    p.mu = 0.8; p.d = 1.2; p.rho = 0.9; p.K = 2.2; p.lambda = 0.6; p.hbar = 1.1; p.c = 0.95;
    const double spacing = 2.0 * p.hbar * derive_scales(p).Omega;
    for(int m = -2; m <= 2; ++m)
    {
        EXPECT_NEAR(energy_full_exact({1, m}, p) - energy_full_exact({0, m}, p), spacing, 1e-12);
        EXPECT_NEAR(energy_full_exact({3, m}, p) - energy_full_exact({2, m}, p), spacing, 1e-12);
    }
}

TEST(Analytic, ExactSpectrumIsBoundedBelowByGroundOscillator)
{
    // E >= hbar Omega for every state (|m_t| Omega - m_t omega >= 0)
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ua(-1.5, 1.5);
    for(int i = 0; i < 50; ++i)
    {
        const PhysicalParams p = presets::natural(2.0, 3.0, ua(rng));
        for(int m = -4; m <= 4; ++m)
        {
            EXPECT_GE(energy_full_exact({0, m}, p), 2.0 - 1e-12);
        }
    }
}

TEST(Analytic, FieldCrossConstantEqualsFluxTimesOmega)
{
    PhysicalParams p;
    p.mu = 1.7; p.d = 0.8; p.rho = 2.3; p.K = 1.0; p.lambda = 1.9; p.hbar = 0.6; p.c = 1.4;
    const DerivedScales s = derive_scales(p);
    EXPECT_NEAR(field_cross_constant(p), s.a * p.hbar * s.omega, 1e-14);
}

TEST(Analytic, BetaFromEnergyInvertsSpectrum)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.3);
    for(int n = 0; n <= 3; ++n)
    {
        for(int m = -3; m <= 3; ++m)
        {
            const RadialParameters rp = radial_parameters({n, m}, p);
            EXPECT_NEAR(beta_from_energy(energy_full_exact({n, m}, p), m, p), rp.beta, 1e-13);
            EXPECT_NEAR(rp.beta, n + 0.5 * (std::fabs(m - 0.3) + 1.0), 1e-15);
        }
    }
}

TEST(Analytic, ReducedAndRegularizedLevels)
{
    const PhysicalParams p = presets::natural();
    EXPECT_DOUBLE_EQ(energy_reduced(0, p), 0.75);
    EXPECT_DOUBLE_EQ(energy_reduced(1, p), 2.25);
    EXPECT_DOUBLE_EQ(energy_reduced(2, p), 3.75);
    EXPECT_DOUBLE_EQ(energy_regularized(1, p), 2.25);
    EXPECT_DOUBLE_EQ(energy_regularized(-1, p), 2.25);
    EXPECT_THROW(energy_reduced(0, presets::oscillator()), ParameterError);
}

TEST(Analytic, ReducedAngularMomentum)
{
    const PhysicalParams p = presets::natural();
    EXPECT_DOUBLE_EQ(angular_momentum_reduced(0, p), -0.5);
    EXPECT_DOUBLE_EQ(angular_momentum_reduced(2, p), -2.5);
    PhysicalParams q = p;
    q.lambda = 1.0;
    for(int n = 0; n <= 5; ++n)
    {
        EXPECT_NEAR(fractional_part_of_shift(angular_momentum_reduced(n, q), q.hbar), 1.0 / (2.0 * std::numbers::pi),
                    1e-12);
    }
    EXPECT_DOUBLE_EQ(angular_momentum_full(-3, p), -3.0);
}

TEST(Analytic, SpectrumTableOrderingAndErrors)
{
    const auto rows = spectrum_table(1, -1, 1, presets::natural());
    ASSERT_EQ(rows.size(), 6u);
    for(std::size_t i = 1; i < rows.size(); ++i)
    {
        EXPECT_LT(rows[i - 1].qn, rows[i].qn);
    }
    EXPECT_DOUBLE_EQ(rows[1].energy_paper, 2.0);
    EXPECT_THROW(spectrum_table(1, 1, 0, presets::natural()), ParameterError);
}
