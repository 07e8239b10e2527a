#ifndef HMW_WAVEFUNCTION_HPP
#define HMW_WAVEFUNCTION_HPP

#include "hmw/analytic.hpp"
#include "hmw/params.hpp"
#include "hmw/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace hmw {

/// Closed-form eigenfunction of the full model,
///   psi = C r^|alpha| exp(-r^2/(4 lambda0^2)) 1F1(-n; |alpha|+1; r^2/(2 lambda0^2)) e^{i m theta}.
/// Lengths inside the Gaussian and the 1F1 argument enter as lambda0^2.
struct Wavefunction
{
    QuantumNumbers qn;
    double alpha_abs     = 0.0;
    double normalization = 0.0; // C, fixed so that the probability integral is 1
    double scale         = 0.0; // lambda0
};

inline Wavefunction make_wavefunction(QuantumNumbers qn, const PhysicalParams& p)
{
    validate(p, Requirement::full);
    require_confinement(p);
    if(qn.n < 0)
    {
        throw ParameterError("wavefunction: n must be non-negative");
    }
    const RadialParameters rp = radial_parameters(qn, p);
    const DerivedScales s     = derive_scales(p);
    const double al           = rp.alpha_abs;
    const double n            = static_cast<double>(qn.n);

    const double log_c2 = log_gamma(n + al + 1.0) - (al + 1.0) * std::numbers::ln2 -
                          std::log(std::numbers::pi) - log_gamma(n + 1.0) - 2.0 * log_gamma(al + 1.0) -
                          2.0 * (al + 1.0) * std::log(s.lambda0);
    return {qn, al, std::exp(0.5 * log_c2), s.lambda0};
}

/// Real radial factor R(r).
inline double radial_amplitude(const Wavefunction& wf, double r)
{
    if(r < 0.0)
    {
        throw ParameterError("wavefunction: r must be non-negative");
    }
    const double l2 = wf.scale * wf.scale;
    const double x  = r * r / (2.0 * l2);
    return wf.normalization * std::pow(r, wf.alpha_abs) * std::exp(-0.5 * x) *
           kummer(-static_cast<double>(wf.qn.n), wf.alpha_abs + 1.0, x);
}

inline std::complex<double> eval_wavefunction(QuantumNumbers qn, const PhysicalParams& p, double r,
                                              double theta)
{
    const Wavefunction wf = make_wavefunction(qn, p);
    const double angle    = std::remainder(theta, 2.0 * std::numbers::pi);
    return radial_amplitude(wf, r) * std::polar(1.0, static_cast<double>(qn.m) * angle);
}

namespace detail {

/// Radius beyond which the Gaussian-damped density is negligible.
inline double quadrature_cutoff(const Wavefunction& wf)
{
    constexpr double eps = 1e-16;
    return wf.scale * std::sqrt(4.0 * std::log(1.0 / eps) + 8.0 * (wf.alpha_abs + 2.0 * wf.qn.n + 2.0));
}

// Composite Gauss-Legendre on [0, r_cut] with dyadic panels towards r = 0,
// where r^(2|alpha|+1) is not smooth for fractional |alpha|.
inline double integrate_radial(const std::function<double(double)>& f, double r_cut, int per_panel)
{
    constexpr int dyadic_levels = 30;
    double total = 0.0;
    double hi    = r_cut;
    for(int level = 0; level <= dyadic_levels; ++level)
    {
        const double lo = level == dyadic_levels ? 0.0 : 0.5 * hi;
        for(const auto& q : gauss_legendre(per_panel, lo, hi))
        {
            total += q.weight * f(q.node);
        }
        hi = lo;
    }
    return total;
}

inline double checked_radial_integral(const std::function<double(double)>& f, double r_cut)
{
    const double coarse = integrate_radial(f, r_cut, 24);
    const double fine   = integrate_radial(f, r_cut, 40);
    if(std::fabs(fine - coarse) > 1e-11 * std::max(1.0, std::fabs(fine)))
    {
        throw NumericalError("radial quadrature did not converge");
    }
    return fine;
}

} // namespace detail

/// Integral of |psi|^2 over the plane.
inline double norm_check(QuantumNumbers qn, const PhysicalParams& p)
{
    const Wavefunction wf = make_wavefunction(qn, p);
    auto density = [&wf](double r) {
        const double R = radial_amplitude(wf, r);
        return 2.0 * std::numbers::pi * R * R * r;
    };
    return detail::checked_radial_integral(density, detail::quadrature_cutoff(wf));
}

/// <psi_a|psi_b> for two states; zero unless the angular numbers match.
inline double overlap(QuantumNumbers a, QuantumNumbers b, const PhysicalParams& p)
{
    if(a.m != b.m)
    {
        return 0.0;
    }
    const Wavefunction wa = make_wavefunction(a, p);
    const Wavefunction wb = make_wavefunction(b, p);
    auto integrand = [&](double r) {
        return 2.0 * std::numbers::pi * radial_amplitude(wa, r) * radial_amplitude(wb, r) * r;
    };
    const double r_cut = std::max(detail::quadrature_cutoff(wa), detail::quadrature_cutoff(wb));
    return detail::checked_radial_integral(integrand, r_cut);
}

} // namespace hmw

#endif // HMW_WAVEFUNCTION_HPP
