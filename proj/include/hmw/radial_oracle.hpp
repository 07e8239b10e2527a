#ifndef HMW_RADIAL_ORACLE_HPP
#define HMW_RADIAL_ORACLE_HPP

#include "hmw/analytic.hpp"
#include "hmw/params.hpp"
#include "hmw/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace hmw {

// Numerical ground truth for the fixed-m radial problem. The operator is
// discretized to a symmetric tridiagonal matrix, its lowest levels are found
// by Sturm bisection on grids h, h/2, h/4 and Richardson-extrapolated.
// Nothing here uses the closed-form spectra except `adjudicate`, which
// compares against them.

struct GridSpec
{
    double r_max = 0.0;
    int n_points = 4000;
    int levels   = 3;
};

enum class Discretization
{
    // R = r^|alpha| v, cell-centred flux form in effective dimension 2|alpha|+2.
    // Second order for every |alpha|; the default.
    flux_weighted,
    // u = sqrt(r) R with the (alpha^2 - 1/4)/r^2 potential and u(0) = 0.
    // Sub-quadratic for |alpha| < 1/2.
    liouville,
};

enum class CrossTerm
{
    canonical, // alpha = m - a, constant -(m - a) hbar omega
    mirrored,  // alpha = m + a, constant +(m + a) hbar omega
};

struct OracleOptions
{
    Discretization discretization = Discretization::flux_weighted;
    CrossTerm convention          = CrossTerm::canonical;
    std::optional<GridSpec> grid;  // default grid when empty
    double tail_tolerance = 1e-12;
    int max_expansions    = 8;
};

struct OracleLevels
{
    int m = 0;
    std::vector<double> eigenvalues;
    std::vector<double> error_estimates;
    GridSpec grid_used;
    std::vector<std::vector<double>> raw; // per refinement level, coarse to fine
    double tail_mass = 0.0;
};

struct AdjudicationRow
{
    int n = 0;
    double e_oracle  = 0.0;
    double error     = 0.0;
    double e_paper   = 0.0;
    double e_exact   = 0.0;
    double threshold = 0.0;
    bool paper_flagged = false;
    bool exact_flagged = false;

    double delta_paper() const { return std::fabs(e_oracle - e_paper); }
    double delta_exact() const { return std::fabs(e_oracle - e_exact); }
};

struct AdjudicationReport
{
    int m = 0;
    OracleLevels levels;
    std::vector<AdjudicationRow> rows;

    bool any_paper_flagged() const
    {
        return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.paper_flagged; });
    }
    bool any_exact_flagged() const
    {
        return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.exact_flagged; });
    }
};

namespace detail {

struct Channel
{
    double alpha_abs = 0.0;
    double shift     = 0.0; // constant energy offset
};

inline Channel channel(int m, const PhysicalParams& p, CrossTerm convention)
{
    const DerivedScales s = derive_scales(p);
    const double index = convention == CrossTerm::canonical ? m - s.a : m + s.a;
    const double sign  = convention == CrossTerm::canonical ? -1.0 : 1.0;
    return {std::fabs(index), sign * index * p.hbar * s.omega};
}

inline void check_grid(const GridSpec& g)
{
    if(!(g.r_max > 0.0) || !std::isfinite(g.r_max))
    {
        throw ParameterError("grid: r_max must be positive");
    }
    if(g.n_points < 3)
    {
        throw ParameterError("grid: n_points must be at least 3");
    }
    if(g.levels < 2)
    {
        throw ParameterError("grid: at least two refinement levels are required");
    }
}

// (j^p - (j-1)^p) / (p j^p), evaluated without forming j^p.
inline double cell_moment_factor(double j, double p)
{
    if(j == 1.0)
    {
        return 1.0 / p;
    }
    return -std::expm1(p * std::log1p(-1.0 / j)) / p;
}

inline TridiagonalOperator build_flux_weighted(const Channel& ch, const PhysicalParams& p, const GridSpec& g)
{
    const DerivedScales s = derive_scales(p);
    const std::size_t n   = static_cast<std::size_t>(g.n_points);
    const double h        = g.r_max / g.n_points;
    const double kin      = p.hbar * p.hbar / (2.0 * p.mu * h * h);
    const double trap     = 0.5 * p.mu * s.Omega * s.Omega * h * h;
    const double dim      = 2.0 * ch.alpha_abs + 2.0;

    TridiagonalOperator t;
    t.step = h;
    t.diag.resize(n);
    t.offdiag.resize(n - 1);
    std::vector<double> g_dim(n);
    for(std::size_t i = 0; i < n; ++i)
    {
        g_dim[i] = cell_moment_factor(static_cast<double>(i + 1), dim);
    }
    for(std::size_t i = 0; i < n; ++i)
    {
        const double j      = static_cast<double>(i + 1);
        const double inner  = j == 1.0 ? 0.0 : std::exp((dim - 1.0) * std::log1p(-1.0 / j));
        const double r2_avg = j * j * cell_moment_factor(j, dim + 2.0) / g_dim[i];
        t.diag[i] = kin * (1.0 + inner) / (j * g_dim[i]) + trap * r2_avg + ch.shift;
        if(i + 1 < n)
        {
            const double ratio = std::exp(0.5 * dim * std::log(j / (j + 1.0)));
            t.offdiag[i] = -kin * ratio / (j * std::sqrt(g_dim[i] * g_dim[i + 1]));
        }
    }
    return t;
}

inline double liouville_potential(const Channel& ch, const PhysicalParams& p, double r)
{
    const DerivedScales s = derive_scales(p);
    const double centrifugal = p.hbar * p.hbar * (ch.alpha_abs * ch.alpha_abs - 0.25) / (2.0 * p.mu * r * r);
    return centrifugal + 0.5 * (p.mu * s.omega * s.omega + p.K) * r * r + ch.shift;
}

inline TridiagonalOperator build_liouville(const Channel& ch, const PhysicalParams& p, const GridSpec& g)
{
    const std::size_t n = static_cast<std::size_t>(g.n_points);
    const double h      = g.r_max / (g.n_points + 1);
    const double kin    = p.hbar * p.hbar / (p.mu * h * h);

    TridiagonalOperator t;
    t.step = h;
    t.diag.resize(n);
    t.offdiag.assign(n - 1, -0.5 * kin);
    for(std::size_t i = 0; i < n; ++i)
    {
        t.diag[i] = kin + liouville_potential(ch, p, static_cast<double>(i + 1) * h);
        if(!std::isfinite(t.diag[i]))
        {
            throw NumericalError("radial problem: potential overflows on the grid");
        }
    }
    return t;
}

inline GridSpec refined(const GridSpec& g, Discretization disc)
{
    GridSpec r = g;
    // both layouts halve h exactly
    r.n_points = disc == Discretization::flux_weighted ? 2 * g.n_points : 2 * g.n_points + 1;
    return r;
}

// Probability carried by the outermost tenth of the grid.
inline double tail_mass(const TridiagonalOperator& t, double lambda)
{
    const std::vector<double> v = eigenvector_tridiagonal(t, lambda);
    const std::size_t start     = v.size() - v.size() / 10;
    double tail = 0.0;
    for(std::size_t i = start; i < v.size(); ++i)
    {
        tail += v[i] * v[i];
    }
    return tail;
}

} // namespace detail

/// One-dimensional potential after u = sqrt(r) R:
///   hbar^2 (alpha^2 - 1/4)/(2 mu r^2) + (mu omega^2 + K) r^2 / 2 + constant.
inline double effective_potential(int m, const PhysicalParams& p, double r,
                                  CrossTerm convention = CrossTerm::canonical)
{
    validate(p, Requirement::full);
    if(!(r > 0.0))
    {
        throw ParameterError("effective_potential: r must be positive");
    }
    return detail::liouville_potential(detail::channel(m, p, convention), p, r);
}

inline TridiagonalOperator build_radial_problem(int m, const PhysicalParams& p, const GridSpec& grid,
                                                Discretization disc = Discretization::flux_weighted,
                                                CrossTerm convention = CrossTerm::canonical)
{
    validate(p, Requirement::full);
    detail::check_grid(grid);
    const detail::Channel ch = detail::channel(m, p, convention);
    return disc == Discretization::flux_weighted ? detail::build_flux_weighted(ch, p, grid)
                                                 : detail::build_liouville(ch, p, grid);
}

/// Default grid: 4000 points out to lambda0 (8 + 2 sqrt(2 n_target + |alpha|)).
inline GridSpec default_grid(int m, const PhysicalParams& p, int k, CrossTerm convention = CrossTerm::canonical)
{
    const double alpha = detail::channel(m, p, convention).alpha_abs;
    const double l0    = derive_scales(p).lambda0;
    return {l0 * (8.0 + 2.0 * std::sqrt(2.0 * (k - 1) + alpha)), 4000, 3};
}

inline OracleLevels solve_levels(int m, const PhysicalParams& p, int k, const OracleOptions& opt = {})
{
    validate(p, Requirement::full);
    require_confinement(p);
    if(k < 1)
    {
        throw ParameterError("solve_levels: k must be positive");
    }
    const detail::Channel ch = detail::channel(m, p, opt.convention);
    GridSpec grid = opt.grid.value_or(default_grid(m, p, k, opt.convention));
    detail::check_grid(grid);
    if(static_cast<int>(k) > grid.n_points)
    {
        throw ParameterError("solve_levels: more levels requested than grid points");
    }

    const auto kk = static_cast<std::size_t>(k);
    OracleLevels out;
    out.m = m;
    for(int expansion = 0;; ++expansion)
    {
        out.raw.clear();
        GridSpec g = grid;
        TridiagonalOperator finest;
        for(int level = 0; level < grid.levels; ++level)
        {
            finest = build_radial_problem(m, p, g, opt.discretization, opt.convention);
            out.raw.push_back(eig_tridiagonal(finest, kk));
            g = detail::refined(g, opt.discretization);
        }
        double tail = 0.0;
        for(double lambda : out.raw.back())
        {
            tail = std::max(tail, detail::tail_mass(finest, lambda));
        }
        out.tail_mass = tail;
        if(tail < opt.tail_tolerance)
        {
            break;
        }
        if(expansion == opt.max_expansions)
        {
            throw NumericalError("solve_levels: tail mass " + std::to_string(tail) +
                                 " still above tolerance after expanding r_max");
        }
        grid.r_max *= 1.5;
    }
    out.grid_used = grid;

    const std::size_t L  = out.raw.size();
    const auto& fine     = out.raw[L - 1];
    const auto& coarse   = out.raw[L - 2];
    const bool sub_quadratic = opt.discretization == Discretization::liouville && ch.alpha_abs < 0.5;
    for(std::size_t i = 0; i < kk; ++i)
    {
        const double extrapolated = (4.0 * fine[i] - coarse[i]) / 3.0;
        const double estimate     = std::fabs(fine[i] - coarse[i]) / 3.0;
        const double noise        = 1e-9 * std::max(1.0, std::fabs(extrapolated));
        if(L >= 3 && !sub_quadratic)
        {
            const double previous = std::fabs(coarse[i] - out.raw[L - 3][i]) / 3.0;
            if(estimate > noise && previous < 2.0 * estimate)
            {
                throw NumericalError("solve_levels: Richardson estimate for level " + std::to_string(i) +
                                     " of m = " + std::to_string(m) + " shrank from " +
                                     std::to_string(previous) + " only to " + std::to_string(estimate));
            }
        }
        out.eigenvalues.push_back(extrapolated);
        out.error_estimates.push_back(std::max(estimate, 1e-15 * std::max(1.0, std::fabs(extrapolated))));
    }
    return out;
}

/// Oracle levels side by side with both closed forms. A closed form is
/// flagged when it misses the oracle by more than the threshold, which is
/// `tol` when given and max(1e-6 hbar Omega, 10 x Richardson estimate) otherwise.
inline AdjudicationReport adjudicate(int m, const PhysicalParams& p, int n_levels, const OracleOptions& opt = {},
                                     std::optional<double> tol = std::nullopt)
{
    AdjudicationReport report;
    report.m      = m;
    report.levels = solve_levels(m, p, n_levels, opt);

    const DerivedScales s    = derive_scales(p);
    const double alpha       = detail::channel(m, p, opt.convention).alpha_abs;
    const double target      = opt.discretization == Discretization::liouville && alpha < 0.5 ? 1e-5 : 1e-6;
    for(int n = 0; n < n_levels; ++n)
    {
        const auto i = static_cast<std::size_t>(n);
        AdjudicationRow row;
        row.n        = n;
        row.e_oracle = report.levels.eigenvalues[i];
        row.error    = report.levels.error_estimates[i];
        row.e_paper  = energy_full_paper({n, m}, p);
        row.e_exact  = energy_full_exact({n, m}, p);
        row.threshold = tol ? *tol : std::max(target * p.hbar * s.Omega, 10.0 * row.error);
        row.paper_flagged = row.delta_paper() > row.threshold;
        row.exact_flagged = row.delta_exact() > row.threshold;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace hmw

#endif // HMW_RADIAL_ORACLE_HPP
