#ifndef HMW_TRIDIAGONAL_HPP
#define HMW_TRIDIAGONAL_HPP

#include "hmw/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace hmw {

/// Real symmetric tridiagonal matrix; `offdiag[i]` couples rows i and i+1.
struct TridiagonalOperator
{
    std::vector<double> diag;
    std::vector<double> offdiag;
    double step = 0.0; // grid spacing h of the discretization that produced it

    std::size_t size() const { return diag.size(); }
};

namespace detail {

inline void check_shape(const TridiagonalOperator& t)
{
    if(t.diag.empty())
    {
        throw ParameterError("tridiagonal operator is empty");
    }
    if(t.offdiag.size() + 1 != t.diag.size())
    {
        throw ParameterError("tridiagonal operator: offdiag must have length N-1");
    }
}

inline double pivot_floor(const TridiagonalOperator& t)
{
    double emax = 1.0;
    for(double e : t.offdiag)
    {
        emax = std::max(emax, e * e);
    }
    return std::numeric_limits<double>::min() * emax;
}

} // namespace detail

/// Gershgorin interval containing every eigenvalue.
inline std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& t)
{
    detail::check_shape(t);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = t.size();
    for(std::size_t i = 0; i < n; ++i)
    {
        const double left  = i > 0 ? std::fabs(t.offdiag[i - 1]) : 0.0;
        const double right = i + 1 < n ? std::fabs(t.offdiag[i]) : 0.0;
        lo = std::min(lo, t.diag[i] - left - right);
        hi = std::max(hi, t.diag[i] + left + right);
    }
    return {lo, hi};
}

/// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
inline std::size_t sturm_count(const TridiagonalOperator& t, double x)
{
    detail::check_shape(t);
    const double pivmin = detail::pivot_floor(t);
    std::size_t count = 0;
    double q = t.diag[0] - x;
    for(std::size_t i = 0;; ++i)
    {
        if(std::fabs(q) < pivmin)
        {
            q = -pivmin;
        }
        if(q < 0.0)
        {
            ++count;
        }
        if(i + 1 == t.size())
        {
            break;
        }
        const double e = t.offdiag[i];
        q = t.diag[i + 1] - x - e * e / q;
    }
    return count;
}

/// The k smallest eigenvalues, ascending, each bisected until the bracket is
/// a few ulps wide.
inline std::vector<double> eig_tridiagonal(const TridiagonalOperator& t, std::size_t k)
{
    detail::check_shape(t);
    if(k < 1 || k > t.size())
    {
        throw ParameterError("eig_tridiagonal: need 1 <= k <= N");
    }
    constexpr int max_iter = 400;
    auto [glo, ghi] = gershgorin_bounds(t);
    const double pad = 1e-12 * std::max({1.0, std::fabs(glo), std::fabs(ghi)});
    glo -= pad;
    ghi += pad;

    std::vector<double> values;
    values.reserve(k);
    double lower = glo;
    for(std::size_t idx = 0; idx < k; ++idx)
    {
        double lo = lower;
        double hi = ghi;
        int iter  = 0;
        while(hi - lo > 4.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, std::max(std::fabs(lo), std::fabs(hi))))
        {
            if(++iter > max_iter)
            {
                throw NumericalError("eig_tridiagonal: bisection cap reached with bracket [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
            }
            const double mid = 0.5 * (lo + hi);
            if(mid <= lo || mid >= hi)
            {
                break; // bracket at floating-point resolution
            }
            if(sturm_count(t, mid) >= idx + 1)
            {
                hi = mid;
            }
            else
            {
                lo = mid;
            }
        }
        values.push_back(0.5 * (lo + hi));
        lower = lo;
    }
    return values;
}

/// Unit eigenvector for an (approximate) eigenvalue, by inverse iteration.
inline std::vector<double> eigenvector_tridiagonal(const TridiagonalOperator& t, double lambda)
{
    detail::check_shape(t);
    const std::size_t n = t.size();
    const double scale  = std::max(1.0, std::fabs(lambda));
    const double shift  = lambda + 1e-10 * scale;

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> cprime(n);
    std::vector<double> dprime(n);
    for(int sweep = 0; sweep < 3; ++sweep)
    {
        // Thomas algorithm on (T - shift) y = v
        double denom = t.diag[0] - shift;
        if(denom == 0.0) { denom = 1e-300; }
        cprime[0] = n > 1 ? t.offdiag[0] / denom : 0.0;
        dprime[0] = v[0] / denom;
        for(std::size_t i = 1; i < n; ++i)
        {
            denom = t.diag[i] - shift - t.offdiag[i - 1] * cprime[i - 1];
            if(denom == 0.0) { denom = 1e-300; }
            cprime[i] = i + 1 < n ? t.offdiag[i] / denom : 0.0;
            dprime[i] = (v[i] - t.offdiag[i - 1] * dprime[i - 1]) / denom;
        }
        v[n - 1] = dprime[n - 1];
        for(std::size_t i = n - 1; i-- > 0;)
        {
            v[i] = dprime[i] - cprime[i] * v[i + 1];
        }
        double norm = 0.0;
        for(double x : v)
        {
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for(double& x : v)
        {
            x /= norm;
        }
    }
    return v;
}

} // namespace hmw

#endif // HMW_TRIDIAGONAL_HPP
