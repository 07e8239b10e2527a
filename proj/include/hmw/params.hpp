#ifndef HMW_PARAMS_HPP
#define HMW_PARAMS_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace hmw {

/// Thrown for inputs that violate a documented precondition.
class ParameterError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative numerical procedure fails to converge.
class NumericalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raw constants of one model instance, in any coherent unit system.
///
/// `lambda` scales the 1/r radial field and `rho` the linear radial field;
/// `K` is the stiffness of the planar harmonic trap.
struct PhysicalParams
{
    double mu     = 1.0;
    double d      = 1.0;
    double lambda = 0.0;
    double rho    = 0.0;
    double K      = 0.0;
    double hbar   = 1.0;
    double c      = 1.0;
};

/// Frequencies and scales derived from PhysicalParams.
struct DerivedScales
{
    double omega   = 0.0; // d rho / (2 mu c^2)
    double Omega   = 0.0; // sqrt(omega^2 + K/mu)
    double a       = 0.0; // dimensionless flux d lambda / (2 pi hbar c^2)
    std::optional<double> theta; // hbar c^2 / (d rho); empty when d rho == 0
    double lambda0 = 0.0; // oscillator length
};

struct QuantumNumbers
{
    int n = 0;
    int m = 0;

    friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
    friend auto operator<=>(const QuantumNumbers&, const QuantumNumbers&) = default;
};

enum class Requirement
{
    full,
    reduced
};

inline DerivedScales derive_scales(const PhysicalParams& p)
{
    DerivedScales s;
    s.omega = p.d * p.rho / (2.0 * p.mu * p.c * p.c);
    s.Omega = std::sqrt(s.omega * s.omega + p.K / p.mu);
    s.a     = p.d * p.lambda / (2.0 * std::numbers::pi * p.hbar * p.c * p.c);
    const double coupling = p.d * p.rho;
    if(coupling != 0.0)
    {
        s.theta = p.hbar * p.c * p.c / coupling;
    }
    const double stiffness = p.mu * p.mu * s.omega * s.omega + p.mu * p.K;
    // sqrt(hbar): the oscillator length sqrt(hbar / (2 mu Omega))
    s.lambda0 = std::sqrt(p.hbar) / (std::sqrt(2.0) * std::pow(stiffness, 0.25));
    return s;
}

/// Throws ParameterError naming the first violated constraint.
inline void validate(const PhysicalParams& p, Requirement req)
{
    auto finite = [](double v) { return std::isfinite(v); };
    if(!finite(p.mu) || !finite(p.d) || !finite(p.lambda) || !finite(p.rho) ||
       !finite(p.K) || !finite(p.hbar) || !finite(p.c))
    {
        throw ParameterError("parameters must be finite numbers");
    }
    if(p.mu <= 0.0)   { throw ParameterError("mass must be positive (mu > 0)"); }
    if(p.hbar <= 0.0) { throw ParameterError("hbar must be positive"); }
    if(p.c <= 0.0)    { throw ParameterError("speed of light must be positive (c > 0)"); }
    if(p.d < 0.0)     { throw ParameterError("dipole magnitude must be non-negative (d >= 0)"); }
    if(p.K < 0.0)     { throw ParameterError("trap stiffness must be non-negative (K >= 0)"); }

    if(req == Requirement::reduced)
    {
        if(p.d * p.rho == 0.0)
        {
            throw ParameterError("noncommutativity undefined: reduced model requires d*rho != 0");
        }
        // closed-form reduced spectra assume the positive orientation
        if(p.d * p.rho < 0.0)
        {
            throw ParameterError("reduced model requires d*rho > 0");
        }
    }
}

/// Full-model operations that need a bound spectrum also require Omega > 0.
inline void require_confinement(const PhysicalParams& p)
{
    if(!(derive_scales(p).Omega > 0.0))
    {
        throw ParameterError("no confinement: K and rho are both zero");
    }
}

inline double theta_or_throw(const PhysicalParams& p)
{
    validate(p, Requirement::reduced);
    return *derive_scales(p).theta;
}

namespace presets {

/// hbar = c = d = mu = 1 with the given field strengths and flux parameter a.
inline PhysicalParams natural(double rho = 2.0, double K = 3.0, double flux = 0.0)
{
    PhysicalParams p;
    p.rho    = rho;
    p.K      = K;
    p.lambda = 2.0 * std::numbers::pi * flux;
    return p;
}

/// Field-free isotropic oscillator, K = mu = hbar = 1.
inline PhysicalParams oscillator()
{
    PhysicalParams p;
    p.K = 1.0;
    return p;
}

} // namespace presets

} // namespace hmw

#endif // HMW_PARAMS_HPP
