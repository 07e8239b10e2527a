#ifndef HMW_SPECFUN_HPP
#define HMW_SPECFUN_HPP

#include "hmw/detail/double_double.hpp"
#include "hmw/params.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace hmw {

namespace detail {

inline bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

} // namespace detail

/// Confluent hypergeometric function 1F1(a; b; x) for real arguments.
///
/// The power series is generated with the term ratio
/// (a+k) x / ((b+k)(k+1)) and accumulated in double-double so that
/// alternating polynomial cases (Laguerre-type, large positive x) keep full
/// double precision. A non-positive integer `a` terminates the series after
/// |a|+1 terms. For a non-terminating series with x < 0 Kummer's
/// transformation 1F1(a;b;x) = e^x 1F1(b-a;b;-x) is applied first.
inline double kummer(double a, double b, double x)
{
    const bool terminating = detail::is_nonpositive_integer(a);
    if(detail::is_nonpositive_integer(b) && !(terminating && -a < -b))
    {
        throw ParameterError("kummer: b = " + std::to_string(b) +
                             " hits a pole before the series terminates");
    }
    if(!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x))
    {
        throw ParameterError("kummer: arguments must be finite");
    }
    if(x == 0.0)
    {
        return 1.0;
    }
    if(!terminating && x < 0.0)
    {
        return std::exp(x) * kummer(b - a, b, -x);
    }

    using detail::DoubleDouble;
    constexpr int max_terms = 10000;

    DoubleDouble sum(1.0);
    DoubleDouble term(1.0);
    const int last = terminating ? static_cast<int>(-a) : max_terms;
    for(int k = 0; k < last; ++k)
    {
        const double kd = static_cast<double>(k);
        const DoubleDouble num = detail::two_sum(a, kd) * DoubleDouble(x);
        const DoubleDouble den = detail::two_sum(b, kd) * DoubleDouble(kd + 1.0);
        const DoubleDouble ratio = num / den;
        term = term * ratio;
        sum  = sum + term;
        if(!terminating && detail::abs_hi(term) <= 1e-17 * detail::abs_hi(sum) &&
           detail::abs_hi(ratio) < 0.5)
        {
            return sum.value();
        }
    }
    if(!terminating)
    {
        throw NumericalError("kummer: series did not converge within " +
                             std::to_string(max_terms) + " terms");
    }
    return sum.value();
}

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
inline double laguerre(int n, double alpha, double x)
{
    if(n < 0)
    {
        throw ParameterError("laguerre: degree must be non-negative");
    }
    if(!(alpha > -1.0))
    {
        throw ParameterError("laguerre: alpha must exceed -1");
    }
    // long double keeps the recurrence error well below 1e-12 relative up to n ~ 20
    const long double al = alpha;
    const long double xl = x;
    long double prev = 1.0L;
    if(n == 0)
    {
        return 1.0;
    }
    long double cur = 1.0L + al - xl;
    for(int k = 1; k < n; ++k)
    {
        const long double next = ((2.0L * k + 1.0L + al - xl) * cur - (k + al) * prev) / (k + 1.0L);
        prev = cur;
        cur  = next;
    }
    return static_cast<double>(cur);
}

/// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients).
inline double log_gamma(double x)
{
    if(!(x > 0.0))
    {
        throw ParameterError("log_gamma: argument must be positive");
    }
    static constexpr std::array<double, 9> coef = {
        0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,  12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;
    if(x < 0.5)
    {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double series  = coef[0];
    for(std::size_t i = 1; i < coef.size(); ++i)
    {
        series += coef[i] / (z + static_cast<double>(i));
    }
    const double t = z + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

struct QuadratureNode
{
    double node   = 0.0;
    double weight = 0.0;
};

/// Gauss-Legendre rule with `npts` nodes mapped to [lo, hi]; exact for
/// polynomials of degree <= 2 npts - 1.
inline std::vector<QuadratureNode> gauss_legendre(int npts, double lo, double hi)
{
    if(npts < 1)
    {
        throw ParameterError("gauss_legendre: need at least one node");
    }
    if(!(lo < hi))
    {
        throw ParameterError("gauss_legendre: require lo < hi");
    }
    std::vector<QuadratureNode> rule(static_cast<std::size_t>(npts));
    const double mid  = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    const int pairs   = (npts + 1) / 2;
    for(int i = 0; i < pairs; ++i)
    {
        double z  = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
        double dp = 0.0;
        for(int iter = 0; iter < 100; ++iter)
        {
            double p1 = 1.0;
            double p2 = 0.0;
            for(int j = 1; j <= npts; ++j)
            {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            dp = npts * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if(std::fabs(step) < 1e-16)
            {
                break;
            }
        }
        // recompute the derivative at the converged root
        double p1 = 1.0;
        double p2 = 0.0;
        for(int j = 1; j <= npts; ++j)
        {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
        }
        dp = npts * (z * p1 - p2) / (z * z - 1.0);
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);

        const auto lo_idx = static_cast<std::size_t>(i);
        const auto hi_idx = static_cast<std::size_t>(npts - 1 - i);
        rule[lo_idx] = {mid - half * z, half * w};
        rule[hi_idx] = {mid + half * z, half * w};
    }
    if(npts % 2 == 1)
    {
        rule[static_cast<std::size_t>(npts / 2)].node = mid;
    }
    return rule;
}

} // namespace hmw

#endif // HMW_SPECFUN_HPP
