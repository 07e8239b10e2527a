#ifndef HMW_ANALYTIC_HPP
#define HMW_ANALYTIC_HPP

#include "hmw/params.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace hmw {

// Closed-form spectra of the trapped dipole and its reduced model.
//
// Angular convention: the centrifugal index is alpha^2 = (m - a)^2 and the
// effective angular number is m_tilde = m - a. Two full-model energies are
// kept side by side:
//   quoted form (2n+1+|m|) hbar Omega - m hbar omega - a hbar (Omega - omega)
//   exact form  (2n+1+|m_tilde|) hbar Omega - m_tilde hbar omega
// They coincide only when m >= a and m >= 0.

struct RadialParameters
{
    double alpha_sq  = 0.0;
    double alpha_abs = 0.0;
    double m_tilde   = 0.0;
    double beta      = 0.0;
};

struct SpectrumEntry
{
    QuantumNumbers qn;
    double energy_paper = 0.0;
    double energy_exact = 0.0;
    double j_full       = 0.0;
};

inline RadialParameters radial_parameters(QuantumNumbers qn, const PhysicalParams& p)
{
    validate(p, Requirement::full);
    const DerivedScales s = derive_scales(p);
    RadialParameters r;
    r.m_tilde   = static_cast<double>(qn.m) - s.a;
    r.alpha_sq  = r.m_tilde * r.m_tilde;
    r.alpha_abs = std::fabs(r.m_tilde);
    r.beta      = qn.n + 0.5 * (r.alpha_abs + 1.0);
    return r;
}

/// Quantization parameter recovered from an energy: the inverse of the
/// exact spectrum, beta = E/(2 hbar Omega) + m_tilde omega/(2 Omega).
inline double beta_from_energy(double energy, int m, const PhysicalParams& p)
{
    validate(p, Requirement::full);
    require_confinement(p);
    const DerivedScales s = derive_scales(p);
    const double m_tilde  = static_cast<double>(m) - s.a;
    return energy / (2.0 * p.hbar * s.Omega) + m_tilde * s.omega / (2.0 * s.Omega);
}

/// Constant d^2 rho lambda / (4 pi mu c^4) produced by squaring the two fields.
inline double field_cross_constant(const PhysicalParams& p)
{
    const double c4 = p.c * p.c * p.c * p.c;
    return p.d * p.d * p.rho * p.lambda / (4.0 * std::numbers::pi * p.mu * c4);
}

inline double energy_full_paper(QuantumNumbers qn, const PhysicalParams& p)
{
    validate(p, Requirement::full);
    const DerivedScales s = derive_scales(p);
    const double m        = static_cast<double>(qn.m);
    const double flux_term = p.d * p.lambda / (2.0 * std::numbers::pi * p.c * p.c);
    return (2.0 * qn.n + 1.0 + std::fabs(m)) * p.hbar * s.Omega - m * p.hbar * s.omega -
           flux_term * (s.Omega - s.omega);
}

inline double energy_full_exact(QuantumNumbers qn, const PhysicalParams& p)
{
    validate(p, Requirement::full);
    const DerivedScales s = derive_scales(p);
    const double m_tilde  = static_cast<double>(qn.m) - s.a;
    return (2.0 * qn.n + 1.0 + std::fabs(m_tilde)) * p.hbar * s.Omega - m_tilde * p.hbar * s.omega;
}

/// Reduced-model oscillator levels K theta (n + 1/2).
inline double energy_reduced(int n, const PhysicalParams& p)
{
    if(n < 0)
    {
        throw ParameterError("energy_reduced: n must be non-negative");
    }
    const double theta = theta_or_throw(p);
    return p.K * theta * (n + 0.5);
}

/// Regularized mu -> 0 spectrum hbar K c^2/(d rho) (|m| + 1/2).
inline double energy_regularized(int m, const PhysicalParams& p)
{
    const double theta = theta_or_throw(p);
    return p.K * theta * (std::fabs(static_cast<double>(m)) + 0.5);
}

inline double angular_momentum_full(int m, const PhysicalParams& p)
{
    return static_cast<double>(m) * p.hbar;
}

/// -(n + 1/2) hbar - d lambda / (2 pi c^2); fractional part tracks the flux.
inline double angular_momentum_reduced(int n, const PhysicalParams& p)
{
    if(n < 0)
    {
        throw ParameterError("angular_momentum_reduced: n must be non-negative");
    }
    validate(p, Requirement::reduced);
    return -(n + 0.5) * p.hbar - p.d * p.lambda / (2.0 * std::numbers::pi * p.c * p.c);
}

/// Fractional part of -J/hbar - 1/2, in [0, 1).
inline double fractional_part_of_shift(double j, double hbar)
{
    const double shift = -j / hbar - 0.5;
    return shift - std::floor(shift);
}

inline SpectrumEntry spectrum_entry(QuantumNumbers qn, const PhysicalParams& p)
{
    return {qn, energy_full_paper(qn, p), energy_full_exact(qn, p), angular_momentum_full(qn.m, p)};
}

/// Rows for n in [0, n_max] and m in [m_min, m_max], sorted by (n, m).
inline std::vector<SpectrumEntry> spectrum_table(int n_max, int m_min, int m_max, const PhysicalParams& p)
{
    if(n_max < 0 || m_min > m_max)
    {
        throw ParameterError("spectrum_table: empty quantum-number range");
    }
    std::vector<SpectrumEntry> rows;
    rows.reserve(static_cast<std::size_t>((n_max + 1) * (m_max - m_min + 1)));
    for(int n = 0; n <= n_max; ++n)
    {
        for(int m = m_min; m <= m_max; ++m)
        {
            rows.push_back(spectrum_entry({n, m}, p));
        }
    }
    return rows;
}

} // namespace hmw

#endif // HMW_ANALYTIC_HPP
