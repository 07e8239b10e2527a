#include "hmw/wavefunction.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hmw;

namespace {

// Composite Simpson on r = s^2, which smooths the r^(2|alpha|+1) behaviour at the origin.
double simpson_norm(QuantumNumbers qn, const PhysicalParams& p)
{
    const Wavefunction wf = make_wavefunction(qn, p);
    const double s_max    = std::sqrt(40.0 * wf.scale);
    const int intervals   = 20000;
    const double h        = s_max / intervals;
    double total          = 0.0;
    for(int i = 0; i <= intervals; ++i)
    {
        const double s = i * h;
        const double r = s * s;
        const double R = radial_amplitude(wf, r);
        const double f = 2.0 * std::numbers::pi * R * R * r * 2.0 * s;
        const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        total += w * f;
    }
    return total * h / 3.0;
}

} // namespace

TEST(Wavefunction, NormalizedOnNaturalPresets)
{
    for(double a : {0.0, 0.25, 0.5})
    {
        const PhysicalParams p = presets::natural(2.0, 3.0, a);
        for(int n = 0; n <= 2; ++n)
        {
            for(int m = -2; m <= 2; ++m)
            {
                EXPECT_NEAR(norm_check({n, m}, p), 1.0, 1e-8) << "a=" << a << " n=" << n << " m=" << m;
            }
        }
    }
}

TEST(Wavefunction, SimpsonOracleAgrees)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.25);
    for(QuantumNumbers qn : {QuantumNumbers{0, 0}, QuantumNumbers{1, -1}, QuantumNumbers{2, 2}})
    {
        EXPECT_NEAR(simpson_norm(qn, p), 1.0, 1e-8) << qn.n << ' ' << qn.m;
    }
}

TEST(Wavefunction, GroundStateConstantClosedForm)
{
    // |C|^2 = 1 / (pi 2^(|alpha|+1) Gamma(|alpha|+1) lambda0^(2|alpha|+2)) for n = 0
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.25);
    for(int m : {-1, 0, 2})
    {
        const Wavefunction wf = make_wavefunction({0, m}, p);
        const double al       = std::fabs(m - 0.25);
        const double c2 = 1.0 / (std::numbers::pi * std::pow(2.0, al + 1.0) * std::tgamma(al + 1.0) *
                                 std::pow(0.5, 2.0 * al + 2.0));
        EXPECT_NEAR(wf.normalization * wf.normalization / c2, 1.0, 1e-13);
    }
}

TEST(Wavefunction, NormalizedAwayFromNaturalUnits)
{
    PhysicalParams p;
    p.mu = 3.0; p.d = 0.7; p.rho = 1.9; p.K = 0.2; p.hbar = 0.4; p.c = 1.3; p.lambda = 0.45;
    for(int n = 0; n <= 2; ++n)
    {
        EXPECT_NEAR(norm_check({n, 1}, p), 1.0, 1e-8);
    }
}

TEST(Wavefunction, SolvesTheRadialEquation)
{
    // -hbar^2/2mu (R'' + R'/r - alpha^2 R/r^2) + mu Omega^2 r^2 R/2 - m_t hbar omega R = E R
    PhysicalParams p;
    p.mu = 1.6; p.d = 0.9; p.rho = 1.4; p.K = 0.7; p.hbar = 0.45; p.c = 1.2; p.lambda = 0.8;
    const DerivedScales s = derive_scales(p);
    for(QuantumNumbers qn : {QuantumNumbers{0, 0}, QuantumNumbers{1, -1}, QuantumNumbers{2, 2}})
    {
        const Wavefunction wf = make_wavefunction(qn, p);
        const double mt       = qn.m - s.a;
        const double energy   = (2.0 * qn.n + 1.0 + std::fabs(mt)) * p.hbar * s.Omega - mt * p.hbar * s.omega;
        const double h        = 1e-4 * wf.scale;
        double worst = 0.0, scale = 0.0;
        for(double x = 0.3; x < 4.0; x += 0.37)
        {
            const double r  = x * wf.scale;
            const double R  = radial_amplitude(wf, r);
            const double Rp = (radial_amplitude(wf, r + h) - radial_amplitude(wf, r - h)) / (2.0 * h);
            const double Rpp =
                (radial_amplitude(wf, r + h) - 2.0 * R + radial_amplitude(wf, r - h)) / (h * h);
            const double lhs = -p.hbar * p.hbar / (2.0 * p.mu) * (Rpp + Rp / r - mt * mt * R / (r * r)) +
                               0.5 * p.mu * s.Omega * s.Omega * r * r * R - mt * p.hbar * s.omega * R;
            worst = std::max(worst, std::fabs(lhs - energy * R));
            scale = std::max(scale, std::fabs(energy * R));
        }
        EXPECT_LT(worst / scale, 1e-6) << qn.n << ' ' << qn.m;
    }
}

TEST(Wavefunction, RadialOrthogonality)
{
    const PhysicalParams p = presets::natural(2.0, 3.0, 0.5);
    for(int m = -1; m <= 1; ++m)
    {
        EXPECT_NEAR(overlap({0, m}, {1, m}, p), 0.0, 1e-10);
        EXPECT_NEAR(overlap({0, m}, {2, m}, p), 0.0, 1e-10);
        EXPECT_NEAR(overlap({1, m}, {2, m}, p), 0.0, 1e-10);
    }
    EXPECT_EQ(overlap({0, 0}, {0, 1}, p), 0.0);
}

TEST(Wavefunction, AngularPhase)
{
    const PhysicalParams p = presets::natural();
    const auto a = eval_wavefunction({0, 2}, p, 0.4, 0.3);
    const auto b = eval_wavefunction({0, 2}, p, 0.4, 0.3 + 2.0 * std::numbers::pi);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-14);
    EXPECT_NEAR(std::arg(a), 0.6, 1e-14);
}

TEST(Wavefunction, RejectsNegativeRadius)
{
    const Wavefunction wf = make_wavefunction({0, 0}, presets::natural());
    EXPECT_THROW(radial_amplitude(wf, -1.0), ParameterError);
    EXPECT_THROW(make_wavefunction({-1, 0}, presets::natural()), ParameterError);
}
