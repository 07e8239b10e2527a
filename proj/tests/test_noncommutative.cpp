#include "hmw/analytic.hpp"
#include "hmw/noncommutative.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hmw;

TEST(Constraints, NaturalPreset)
{
    const ConstraintSystem cs = build_constraints(presets::natural());
    EXPECT_DOUBLE_EQ(cs.constraint[0][0], 0.0);
    EXPECT_DOUBLE_EQ(cs.constraint[0][1], -2.0);
    EXPECT_DOUBLE_EQ(cs.constraint[1][0], 2.0);
    EXPECT_DOUBLE_EQ(cs.constraint[1][1], 0.0);
    EXPECT_DOUBLE_EQ(cs.dirac_xx, 0.5);
    EXPECT_DOUBLE_EQ(cs.dirac[1][0], -cs.dirac[0][1]);
    const Matrix2 id = multiply(cs.constraint, cs.inverse);
    EXPECT_DOUBLE_EQ(id[0][0], 1.0);
    EXPECT_DOUBLE_EQ(id[0][1], 0.0);
}

TEST(Constraints, SingularWithoutUniformField)
{
    try
    {
        build_constraints(presets::oscillator());
        FAIL() << "expected ParameterError";
    }
    catch(const ParameterError& e)
    {
        EXPECT_NE(std::string(e.what()).find("second-class matrix singular"), std::string::npos);
    }
}

TEST(Constraints, ThetaConsistency)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for(int i = 0; i < 100; ++i)
    {
        PhysicalParams p;
        p.mu = u(rng); p.d = u(rng); p.rho = u(rng); p.K = u(rng); p.lambda = u(rng); p.hbar = u(rng); p.c = u(rng);
        const double theta = *derive_scales(p).theta;
        EXPECT_NEAR(build_constraints(p).dirac_xx * p.hbar, theta, 1e-14 * theta);
    }
}

TEST(Constraints, BracketIsLocalCurlIndependentOfLineField)
{
    // curl of the constraint potential: -(d/c^2) rho everywhere off the origin, whatever lambda is
    PhysicalParams p = presets::natural();
    for(double lambda : {0.0, 1.0, 7.5})
    {
        p.lambda = lambda;
        for(auto [x, y] : {std::pair{0.7, 0.2}, std::pair{-1.3, 0.9}, std::pair{0.1, -2.0}})
        {
            EXPECT_NEAR(constraint_bracket_at(p, x, y), -p.d * p.rho / (p.c * p.c), 1e-6) << lambda;
        }
    }
}

TEST(Fock, TwoLevelCoordinate)
{
    const FockCoordinates f = fock_coordinates(0.5, 2);
    EXPECT_DOUBLE_EQ(f.X1(0, 0), 0.0);
    EXPECT_DOUBLE_EQ(f.X1(0, 1), 0.5);
    EXPECT_DOUBLE_EQ(f.X1(1, 0), 0.5);
    EXPECT_DOUBLE_EQ(f.X1(1, 1), 0.0);
}

TEST(Fock, CommutatorOnInteriorBlock)
{
    const FockCoordinates f = fock_coordinates(0.37, 30);
    // [X1, X2] = i [X1, P]; should equal i theta
    const DenseMatrix c = commutator(f.X1, f.P) - 0.37 * DenseMatrix::identity(30);
    EXPECT_LT(max_abs(c, 29), 1e-14);
    EXPECT_GT(std::fabs(c(29, 29)), 1.0); // the truncation corner is wrong, as expected
}

TEST(Fock, ThreeLevelRadiusOperator)
{
    // Hr = (K/2) theta (A A^+ + A^+ A): diagonal K theta (j + 1/2) except the last entry K theta (N-1)/2
    const PhysicalParams p = presets::natural();
    const FockCoordinates f = fock_coordinates(0.5, 3);
    const DenseMatrix hr = 1.5 * (f.X1 * f.X1 - f.P * f.P);
    const auto ev = jacobi_eigenvalues(hr);
    EXPECT_NEAR(ev[0], 0.75, 1e-14);
    EXPECT_NEAR(ev[1], 1.5, 1e-14);
    EXPECT_NEAR(ev[2], 2.25, 1e-14);
    EXPECT_THROW(build_fock(p, 3), ParameterError);
}

TEST(Fock, ReducedSpectrum)
{
    const PhysicalParams p = presets::natural();
    const auto ev = reduced_spectrum_numeric(p, 200, 3);
    EXPECT_NEAR(ev[0], 0.75, 1e-8);
    EXPECT_NEAR(ev[1], 2.25, 1e-8);
    EXPECT_NEAR(ev[2], 3.75, 1e-8);
}

TEST(Fock, FreeAndScaledSpectra)
{
    PhysicalParams p = presets::natural(2.0, 0.0);
    for(double e : reduced_spectrum_numeric(p, 40, 5))
    {
        EXPECT_NEAR(e, 0.0, 1e-14);
    }
    const auto base    = reduced_spectrum_numeric(presets::natural(2.0, 1.3), 40, 5);
    const auto doubled = reduced_spectrum_numeric(presets::natural(2.0, 2.6), 40, 5);
    for(std::size_t i = 0; i < base.size(); ++i)
    {
        EXPECT_NEAR(doubled[i], 2.0 * base[i], 1e-12);
    }
}

TEST(Fock, AngularSpectrum)
{
    PhysicalParams p = presets::natural();
    auto j = angular_spectrum_numeric(p, 200, 2);
    EXPECT_NEAR(j[0], -0.5, 1e-8);
    EXPECT_NEAR(j[1], -1.5, 1e-8);
    p.lambda = 1.0;
    j = angular_spectrum_numeric(p, 200, 6);
    for(int n = 0; n < 6; ++n)
    {
        EXPECT_NEAR(j[n], -(n + 0.5) - 1.0 / (2.0 * std::numbers::pi), 1e-8);
        EXPECT_NEAR(fractional_part_of_shift(j[n], 1.0), 1.0 / (2.0 * std::numbers::pi), 1e-10);
    }
}

TEST(Fock, LevelCountLimitedByTruncation)
{
    EXPECT_THROW(reduced_spectrum_numeric(presets::natural(), 40, 11), ParameterError);
    EXPECT_NO_THROW(reduced_spectrum_numeric(presets::natural(), 40, 10));
}

TEST(Fock, GeneratorResiduals)
{
    for(double lambda : {0.0, 2.0})
    {
        PhysicalParams p = presets::natural(1.7, 0.9);
        p.lambda = lambda;
        p.hbar = 0.8;
        const GeneratorResiduals r = generator_check(p, 64);
        EXPECT_LT(r.generator, 1e-10);
        EXPECT_LT(r.conservation, 1e-10);
        EXPECT_LT(r.commutator, 1e-12);
    }
    EXPECT_THROW(generator_check(presets::natural(), 8), ParameterError);
}
