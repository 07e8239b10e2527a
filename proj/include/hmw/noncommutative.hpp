#ifndef HMW_NONCOMMUTATIVE_HPP
#define HMW_NONCOMMUTATIVE_HPP

#include "hmw/dense.hpp"
#include "hmw/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace hmw {

// Reduced (massless) model. The constraints p_i - (d/c^2) eps_ij B_j form a
// second-class pair; their Dirac bracket makes the coordinates conjugate,
// [x1, x2] = i theta with theta = hbar c^2/(d rho). The coordinates are
// realised on a truncated Fock space: X1 = sqrt(theta/2)(A + A^+) and
// X2 = i P with P = sqrt(theta/2)(A^+ - A) real antisymmetric, so that
// X1^2 + X2^2 = X1^2 - P^2 stays real symmetric.

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct ConstraintSystem
{
    Matrix2 constraint{};     // {phi_i, phi_j}
    Matrix2 inverse{};
    Matrix2 dirac{};          // {x_i, x_j}_D
    double dirac_xx = 0.0;    // {x_1, x_2}_D = c^2/(d rho)
};

inline Matrix2 multiply(const Matrix2& a, const Matrix2& b)
{
    Matrix2 c{};
    for(int i = 0; i < 2; ++i)
    {
        for(int j = 0; j < 2; ++j)
        {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return c;
}

/// {phi_1, phi_2} = d_1 A_2 - d_2 A_1 for the constraint potential
/// A_i = (d/c^2) eps_ij B_j, by central differences at (x1, x2).
/// The 1/r field is divergence free away from the origin, so only rho survives.
inline double constraint_bracket_at(const PhysicalParams& p, double x1, double x2, double step = 1e-5)
{
    auto potential = [&p](double y1, double y2) {
        const double r   = std::hypot(y1, y2);
        const double mag = p.lambda / (2.0 * std::numbers::pi * r) + 0.5 * p.rho * r;
        const double b1  = mag * y1 / r;
        const double b2  = mag * y2 / r;
        const double k   = p.d / (p.c * p.c);
        return std::array<double, 2>{k * b2, -k * b1};
    };
    const double d1_a2 = (potential(x1 + step, x2)[1] - potential(x1 - step, x2)[1]) / (2.0 * step);
    const double d2_a1 = (potential(x1, x2 + step)[0] - potential(x1, x2 - step)[0]) / (2.0 * step);
    return d1_a2 - d2_a1;
}

inline ConstraintSystem build_constraints(const PhysicalParams& p)
{
    if(p.d * p.rho == 0.0)
    {
        throw ParameterError("second-class matrix singular: d*rho == 0");
    }
    validate(p, Requirement::reduced);
    const double k = p.d * p.rho / (p.c * p.c);

    ConstraintSystem cs;
    cs.constraint = {{{0.0, -k}, {k, 0.0}}};
    const double det = cs.constraint[0][0] * cs.constraint[1][1] - cs.constraint[0][1] * cs.constraint[1][0];
    cs.inverse = {{{cs.constraint[1][1] / det, -cs.constraint[0][1] / det},
                   {-cs.constraint[1][0] / det, cs.constraint[0][0] / det}}};

    // {x_i, phi_j} = delta_ij and {phi_i, x_j} = -delta_ij
    const Matrix2 x_phi = {{{1.0, 0.0}, {0.0, 1.0}}};
    const Matrix2 phi_x = {{{-1.0, 0.0}, {0.0, -1.0}}};
    const Matrix2 prod  = multiply(multiply(x_phi, cs.inverse), phi_x);
    for(int i = 0; i < 2; ++i)
    {
        for(int j = 0; j < 2; ++j)
        {
            cs.dirac[i][j] = -prod[i][j];
        }
    }
    cs.dirac_xx = cs.dirac[0][1];
    return cs;
}

struct FockCoordinates
{
    double theta = 0.0;
    DenseMatrix X1;
    DenseMatrix P; // X2 = i P
};

/// Truncated ladder realisation of [x1, x2] = i theta (theta > 0), any N >= 1.
inline FockCoordinates fock_coordinates(double theta, std::size_t n)
{
    if(n < 1)
    {
        throw ParameterError("fock_coordinates: truncation must be positive");
    }
    if(!(theta > 0.0))
    {
        throw ParameterError("fock_coordinates: theta must be positive");
    }
    DenseMatrix lower(n); // A, with A(j, j+1) = sqrt(j+1)
    for(std::size_t j = 0; j + 1 < n; ++j)
    {
        lower(j, j + 1) = std::sqrt(static_cast<double>(j + 1));
    }
    const DenseMatrix raise = lower.transpose();
    const double s          = std::sqrt(0.5 * theta);
    return {theta, s * (lower + raise), s * (raise - lower)};
}

struct FockOperators
{
    std::size_t truncation = 0;
    double theta = 0.0;
    DenseMatrix X1;
    DenseMatrix P;
    DenseMatrix Hr; // (K/2)(x1^2 + x2^2)
    DenseMatrix Jr; // -(d/2c^2)(rho (x1^2 + x2^2) + lambda/pi)
};

inline FockOperators build_fock(const PhysicalParams& p, std::size_t n)
{
    const double theta = theta_or_throw(p);
    if(n < 8)
    {
        throw ParameterError("build_fock: truncation N must be at least 8, got " + std::to_string(n));
    }
    FockCoordinates xy = fock_coordinates(theta, n);
    const DenseMatrix radius2 = xy.X1 * xy.X1 - xy.P * xy.P;

    FockOperators f;
    f.truncation = n;
    f.theta      = theta;
    f.Hr         = (0.5 * p.K) * radius2;
    f.Jr = (-p.d / (2.0 * p.c * p.c)) * (p.rho * radius2 + (p.lambda / std::numbers::pi) * DenseMatrix::identity(n));
    f.X1 = std::move(xy.X1);
    f.P  = std::move(xy.P);
    return f;
}

namespace detail {

inline void check_interior(std::size_t n, int k)
{
    if(k < 1 || static_cast<std::size_t>(k) > n / 4)
    {
        throw ParameterError("requested " + std::to_string(k) + " levels but only N/4 = " +
                             std::to_string(n / 4) + " are free of truncation effects");
    }
}

} // namespace detail

/// Lowest k eigenvalues of H_r.
inline std::vector<double> reduced_spectrum_numeric(const PhysicalParams& p, std::size_t n, int k)
{
    const FockOperators f = build_fock(p, n);
    detail::check_interior(n, k);
    std::vector<double> all = jacobi_eigenvalues(f.Hr);
    all.resize(static_cast<std::size_t>(k));
    return all;
}

/// Largest k eigenvalues of J_r, in decreasing order.
inline std::vector<double> angular_spectrum_numeric(const PhysicalParams& p, std::size_t n, int k)
{
    const FockOperators f = build_fock(p, n);
    detail::check_interior(n, k);
    std::vector<double> all = jacobi_eigenvalues(f.Jr);
    std::reverse(all.begin(), all.end());
    all.resize(static_cast<std::size_t>(k));
    return all;
}

struct GeneratorResiduals
{
    double generator    = 0.0; // [J_r, x_i] - i hbar eps_ij x_j
    double conservation = 0.0; // [J_r, H_r]
    double commutator   = 0.0; // [x_1, x_2] - i theta
};

/// Interior-block residuals of the rotation-generator and conservation identities.
inline GeneratorResiduals generator_check(const PhysicalParams& p, std::size_t n)
{
    if(n < 16)
    {
        throw ParameterError("generator_check: truncation N must be at least 16");
    }
    const FockOperators f     = build_fock(p, n);
    const std::size_t interior = n - 2;

    // [J, X1] - i hbar X2 = [J, X1] + hbar P ;  [J, X2] + i hbar X1 = i([J, P] + hbar X1)
    const DenseMatrix r1 = commutator(f.Jr, f.X1) + p.hbar * f.P;
    const DenseMatrix r2 = commutator(f.Jr, f.P) + p.hbar * f.X1;

    GeneratorResiduals out;
    out.generator    = std::max(max_abs(r1, interior), max_abs(r2, interior));
    out.conservation = max_abs(commutator(f.Jr, f.Hr), interior);
    out.commutator   = max_abs(commutator(f.X1, f.P) - f.theta * DenseMatrix::identity(n), n - 1);
    return out;
}

} // namespace hmw

#endif // HMW_NONCOMMUTATIVE_HPP
