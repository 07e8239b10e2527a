#ifndef HMW_LIMIT_STUDY_HPP
#define HMW_LIMIT_STUDY_HPP

#include "hmw/analytic.hpp"
#include "hmw/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace hmw {

// mu -> 0 study. Full-model energies diverge like 1/mu; a single
// mu-dependent subtraction
//   S(mu) = hbar d rho/(2 mu c^2) + hbar c^2 K/(2 d rho) - lambda K/(2 pi rho)
// removes the divergence only for n = 0, m_tilde > 0, whose subtracted
// energies then tend to the reduced-model levels.

struct MuSchedule
{
    double start = 0.01;
    double factor = 0.1;
    int steps = 5;
};

/// Least-squares coefficients of c_{-1}/mu + c_0 + c_1 mu.
struct BranchFit
{
    double c_minus1  = 0.0;
    double c0        = 0.0;
    double c1        = 0.0;
    double residual  = 0.0; // max relative deviation over samples
    double condition = 0.0; // 1-norm condition of the scaled normal matrix
};

struct OmegaExpansion
{
    double inverse_mass = 0.0; // coefficient of 1/mu, d rho / (2 c^2)
    double constant     = 0.0; // c^2 K / (d rho)
};

struct LimitReport
{
    QuantumNumbers qn;
    double m_tilde = 0.0;
    std::vector<double> mu_samples;
    std::vector<double> energies_exact;
    std::vector<double> energies_paper;
    BranchFit fit_exact;
    BranchFit fit_paper;
    std::vector<double> subtracted;   // E_exact(mu) - S(mu)
    std::vector<double> extrapolated; // linear-in-mu extrapolation of consecutive pairs
    double expected_divergence = 0.0; // (2n+1+|m_tilde|-m_tilde) hbar d rho / (2 c^2)
    double energy_scale = 0.0;
    bool survives   = false; // analytic: n == 0 and m_tilde > 0
    bool converges  = false; // numeric: extrapolated sequence is Cauchy
    bool boundary   = false; // n == 0, m_tilde == 0: finite, but not counted as surviving
    std::optional<double> limit_value;
    double regularized = 0.0; // energy_regularized(m)

    bool consistent() const { return boundary || survives == converges; }
    bool matches_regularized() const
    {
        return !survives || (limit_value && std::fabs(*limit_value - regularized) <= 1e-6 * energy_scale);
    }
};

inline double universal_subtraction(const PhysicalParams& p, double mu)
{
    validate(p, Requirement::reduced);
    if(!(mu > 0.0))
    {
        throw ParameterError("universal_subtraction: mu must be positive");
    }
    const double c2 = p.c * p.c;
    return p.hbar * p.d * p.rho / (2.0 * mu * c2) + 0.5 * p.hbar * c2 * p.K / (p.d * p.rho) -
           p.lambda * p.K / (2.0 * std::numbers::pi * p.rho);
}

/// Omega = (d rho / 2 c^2)/mu + c^2 K/(d rho) + O(mu).
inline OmegaExpansion omega_limit_expansion(const PhysicalParams& p)
{
    if(p.d * p.rho == 0.0)
    {
        throw ParameterError("omega_limit_expansion: d*rho == 0 changes the limit structure");
    }
    const double c2 = p.c * p.c;
    return {p.d * p.rho / (2.0 * c2), c2 * p.K / (p.d * p.rho)};
}

namespace detail {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

inline Vec3 solve3(Mat3 a, Vec3 b)
{
    for(int col = 0; col < 3; ++col)
    {
        int pivot = col;
        for(int r = col + 1; r < 3; ++r)
        {
            if(std::fabs(a[r][col]) > std::fabs(a[pivot][col]))
            {
                pivot = r;
            }
        }
        if(a[pivot][col] == 0.0)
        {
            throw NumericalError("limit fit: singular normal equations");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for(int r = col + 1; r < 3; ++r)
        {
            const double f = a[r][col] / a[col][col];
            for(int c = col; c < 3; ++c)
            {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    Vec3 x{};
    for(int r = 2; r >= 0; --r)
    {
        double s = b[r];
        for(int c = r + 1; c < 3; ++c)
        {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    return x;
}

inline double norm1(const Mat3& a)
{
    double best = 0.0;
    for(int c = 0; c < 3; ++c)
    {
        best = std::max(best, std::fabs(a[0][c]) + std::fabs(a[1][c]) + std::fabs(a[2][c]));
    }
    return best;
}

// Normal equations on the column-scaled basis {1/mu, 1, mu}.
inline BranchFit fit_divergence(const std::vector<double>& mu, const std::vector<double>& e)
{
    const std::size_t n = mu.size();
    std::vector<Vec3> rows(n);
    Vec3 scale{0.0, 0.0, 0.0};
    for(std::size_t i = 0; i < n; ++i)
    {
        rows[i] = {1.0 / mu[i], 1.0, mu[i]};
        for(int c = 0; c < 3; ++c)
        {
            scale[c] = std::max(scale[c], std::fabs(rows[i][c]));
        }
    }
    Mat3 normal{};
    Vec3 rhs{};
    for(std::size_t i = 0; i < n; ++i)
    {
        for(int r = 0; r < 3; ++r)
        {
            const double ar = rows[i][r] / scale[r];
            rhs[r] += ar * e[i];
            for(int c = 0; c < 3; ++c)
            {
                normal[r][c] += ar * rows[i][c] / scale[c];
            }
        }
    }
    Mat3 inverse{};
    for(int c = 0; c < 3; ++c)
    {
        Vec3 unit{};
        unit[c] = 1.0;
        const Vec3 col = solve3(normal, unit);
        for(int r = 0; r < 3; ++r)
        {
            inverse[r][c] = col[r];
        }
    }
    BranchFit fit;
    fit.condition = norm1(normal) * norm1(inverse);
    if(fit.condition > 1e12)
    {
        throw NumericalError("limit fit: normal equations ill-conditioned (condition " +
                             std::to_string(fit.condition) + ")");
    }
    const Vec3 x = solve3(normal, rhs);
    fit.c_minus1 = x[0] / scale[0];
    fit.c0       = x[1] / scale[1];
    fit.c1       = x[2] / scale[2];
    for(std::size_t i = 0; i < n; ++i)
    {
        const double model = fit.c_minus1 / mu[i] + fit.c0 + fit.c1 * mu[i];
        const double denom = e[i] != 0.0 ? std::fabs(e[i]) : 1.0;
        fit.residual       = std::max(fit.residual, std::fabs(model - e[i]) / denom);
    }
    return fit;
}

} // namespace detail

inline LimitReport sweep_mu(QuantumNumbers qn, const PhysicalParams& p, const MuSchedule& schedule = {})
{
    validate(p, Requirement::reduced);
    if(schedule.steps < 4)
    {
        throw ParameterError("sweep_mu: at least four mu samples are required");
    }
    if(!(schedule.factor > 0.0 && schedule.factor < 1.0))
    {
        throw ParameterError("sweep_mu: factor must lie in (0, 1)");
    }
    if(!(schedule.start > 0.0))
    {
        throw ParameterError("sweep_mu: mu start must be positive");
    }
    if(qn.n < 0)
    {
        throw ParameterError("sweep_mu: n must be non-negative");
    }

    const DerivedScales s = derive_scales(p);
    LimitReport rep;
    rep.qn       = qn;
    rep.m_tilde  = qn.m - s.a;
    const double theta     = *s.theta;
    const double k_theta   = p.K * theta;
    const double base_freq = p.d * p.rho / (2.0 * schedule.start * p.c * p.c);
    rep.energy_scale       = k_theta > 0.0 ? k_theta : p.hbar * base_freq;
    rep.expected_divergence = (2.0 * qn.n + 1.0 + std::fabs(rep.m_tilde) - rep.m_tilde) * p.hbar * p.d * p.rho /
                              (2.0 * p.c * p.c);
    rep.regularized = energy_regularized(qn.m, p);

    double mu = schedule.start;
    for(int i = 0; i < schedule.steps; ++i, mu *= schedule.factor)
    {
        PhysicalParams q = p;
        q.mu = mu;
        validate(q, Requirement::full);
        rep.mu_samples.push_back(mu);
        rep.energies_exact.push_back(energy_full_exact(qn, q));
        rep.energies_paper.push_back(energy_full_paper(qn, q));
        rep.subtracted.push_back(rep.energies_exact.back() - universal_subtraction(p, mu));
    }
    rep.fit_exact = detail::fit_divergence(rep.mu_samples, rep.energies_exact);
    rep.fit_paper = detail::fit_divergence(rep.mu_samples, rep.energies_paper);

    for(std::size_t i = 1; i < rep.subtracted.size(); ++i)
    {
        const double r = rep.mu_samples[i] / rep.mu_samples[i - 1];
        rep.extrapolated.push_back((rep.subtracted[i] - r * rep.subtracted[i - 1]) / (1.0 - r));
    }
    const std::size_t last = rep.extrapolated.size() - 1;
    rep.converges = std::fabs(rep.extrapolated[last] - rep.extrapolated[last - 1]) <= 1e-6 * rep.energy_scale;
    if(rep.converges)
    {
        rep.limit_value = rep.extrapolated[last];
    }

    constexpr double flux_eps = 1e-12;
    rep.survives = qn.n == 0 && rep.m_tilde > flux_eps;
    rep.boundary = qn.n == 0 && std::fabs(rep.m_tilde) <= flux_eps;
    return rep;
}

/// Sweeps every (n, m) with 0 <= n <= n_max and m_min <= m <= m_max, sorted by (n, m).
inline std::vector<LimitReport> classify_states(const PhysicalParams& p, int n_max, int m_min, int m_max,
                                                const MuSchedule& schedule = {})
{
    if(n_max < 0 || m_min > m_max)
    {
        throw ParameterError("classify_states: empty quantum-number range");
    }
    std::vector<LimitReport> out;
    for(int n = 0; n <= n_max; ++n)
    {
        for(int m = m_min; m <= m_max; ++m)
        {
            out.push_back(sweep_mu({n, m}, p, schedule));
        }
    }
    return out;
}

} // namespace hmw

#endif // HMW_LIMIT_STUDY_HPP
