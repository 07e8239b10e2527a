#ifndef HMW_REPORT_HPP
#define HMW_REPORT_HPP

#include "hmw/analytic.hpp"
#include "hmw/limit_study.hpp"
#include "hmw/noncommutative.hpp"
#include "hmw/radial_oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace hmw {

// Serialization of study results. Numbers in CSV use 17 significant digits;
// JSON relies on nlohmann's round-trip formatting. Everything is a pure
// function of its input, so repeated runs produce identical bytes.

using ordered_json = nlohmann::ordered_json;

inline std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---- spectrum ------------------------------------------------------------

inline std::string spectrum_csv(const std::vector<SpectrumEntry>& rows)
{
    std::string out = "n,m,E_paper,E_exact,J_full\n";
    for(const auto& r : rows)
    {
        out += std::to_string(r.qn.n) + ',' + std::to_string(r.qn.m) + ',' + format_real(r.energy_paper) + ',' +
               format_real(r.energy_exact) + ',' + format_real(r.j_full) + '\n';
    }
    return out;
}

inline ordered_json spectrum_json(const std::vector<SpectrumEntry>& rows)
{
    ordered_json list = ordered_json::array();
    for(const auto& r : rows)
    {
        list.push_back({{"n", r.qn.n},
                        {"m", r.qn.m},
                        {"E_paper", r.energy_paper},
                        {"E_exact", r.energy_exact},
                        {"J_full", r.j_full}});
    }
    return {{"rows", list}};
}

// ---- radial oracle -------------------------------------------------------

inline ordered_json oracle_json(const AdjudicationReport& rep)
{
    ordered_json levels = ordered_json::array();
    for(const auto& row : rep.rows)
    {
        levels.push_back({{"n", row.n},
                          {"E", row.e_oracle},
                          {"err", row.error},
                          {"E_paper", row.e_paper},
                          {"E_exact", row.e_exact},
                          {"delta_paper", row.delta_paper()},
                          {"delta_exact", row.delta_exact()},
                          {"threshold", row.threshold},
                          {"paper_flagged", row.paper_flagged},
                          {"exact_flagged", row.exact_flagged}});
    }
    return {{"m", rep.m},
            {"grid", {{"rMax", rep.levels.grid_used.r_max}, {"nPoints", rep.levels.grid_used.n_points}}},
            {"levels", levels},
            {"tail_mass", rep.levels.tail_mass}};
}

// ---- reduced model -------------------------------------------------------

struct ReducedLevel
{
    int n = 0;
    double e_numeric = 0.0;
    double e_closed  = 0.0;
    double j_numeric = 0.0;
    double j_closed  = 0.0;
};

struct ReducedReport
{
    double theta = 0.0;
    std::vector<ReducedLevel> levels;
    GeneratorResiduals residuals;

    double max_energy_error() const
    {
        double v = 0.0;
        for(const auto& l : levels)
        {
            v = std::max(v, std::fabs(l.e_numeric - l.e_closed));
        }
        return v;
    }
    double max_angular_error() const
    {
        double v = 0.0;
        for(const auto& l : levels)
        {
            v = std::max(v, std::fabs(l.j_numeric - l.j_closed));
        }
        return v;
    }
};

inline ReducedReport make_reduced_report(const PhysicalParams& p, std::size_t truncation, int k)
{
    ReducedReport rep;
    rep.theta = theta_or_throw(p);
    const auto energies = reduced_spectrum_numeric(p, truncation, k);
    const auto angular  = angular_spectrum_numeric(p, truncation, k);
    for(int n = 0; n < k; ++n)
    {
        const auto i = static_cast<std::size_t>(n);
        rep.levels.push_back({n, energies[i], energy_reduced(n, p), angular[i], angular_momentum_reduced(n, p)});
    }
    rep.residuals = generator_check(p, std::max<std::size_t>(truncation, 16));
    return rep;
}

inline ordered_json reduced_json(const ReducedReport& rep)
{
    ordered_json levels = ordered_json::array();
    for(const auto& l : rep.levels)
    {
        levels.push_back({{"n", l.n},
                          {"E_numeric", l.e_numeric},
                          {"E_closed", l.e_closed},
                          {"J_numeric", l.j_numeric},
                          {"J_closed", l.j_closed}});
    }
    return {{"theta", rep.theta},
            {"levels", levels},
            {"residuals",
             {{"generator", rep.residuals.generator},
              {"conservation", rep.residuals.conservation},
              {"commutator", rep.residuals.commutator}}}};
}

// ---- limit study ---------------------------------------------------------

inline ordered_json fit_json(const BranchFit& f)
{
    return {{"cMinus1", f.c_minus1},
            {"c0", f.c0},
            {"c1", f.c1},
            {"residual", f.residual},
            {"condition", f.condition}};
}

inline ordered_json limit_json(const LimitReport& r)
{
    ordered_json j = {{"n", r.qn.n},
                      {"m", r.qn.m},
                      {"mTilde", r.m_tilde},
                      {"muSamples", r.mu_samples},
                      {"energies", {{"exact", r.energies_exact}, {"paper", r.energies_paper}}},
                      {"fit", {{"exact", fit_json(r.fit_exact)}, {"paper", fit_json(r.fit_paper)}}},
                      {"expectedDivergence", r.expected_divergence},
                      {"subtracted", r.subtracted},
                      {"extrapolated", r.extrapolated},
                      {"survives", r.survives},
                      {"converges", r.converges},
                      {"boundary", r.boundary}};
    j["limitValue"] = r.limit_value ? ordered_json(*r.limit_value) : ordered_json(nullptr);
    j["regularized"] = r.regularized;
    j["matchesRegularized"] = r.matches_regularized();
    return j;
}

inline ordered_json limit_json(const std::vector<LimitReport>& reports)
{
    ordered_json list = ordered_json::array();
    for(const auto& r : reports)
    {
        list.push_back(limit_json(r));
    }
    return {{"states", list}};
}

/// Two-column table (mu, E_subtracted) for one state.
inline std::string limit_csv(const LimitReport& r)
{
    std::string out = "mu,E_subtracted\n";
    for(std::size_t i = 0; i < r.mu_samples.size(); ++i)
    {
        out += format_real(r.mu_samples[i]) + ',' + format_real(r.subtracted[i]) + '\n';
    }
    return out;
}

/// All states in one table, for stdout.
inline std::string limit_table_csv(const std::vector<LimitReport>& reports)
{
    std::string out = "n,m,mu,E_subtracted\n";
    for(const auto& r : reports)
    {
        for(std::size_t i = 0; i < r.mu_samples.size(); ++i)
        {
            out += std::to_string(r.qn.n) + ',' + std::to_string(r.qn.m) + ',' + format_real(r.mu_samples[i]) +
                   ',' + format_real(r.subtracted[i]) + '\n';
        }
    }
    return out;
}

namespace detail {

inline std::string svg_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string svg_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace detail

/// One stacked panel per state: E - S against log10(mu), each autoscaled.
inline std::string limit_svg(const std::vector<LimitReport>& reports)
{
    constexpr double width   = 640.0;
    constexpr double panel_h = 150.0;
    constexpr double left    = 90.0;
    constexpr double right   = 20.0;
    constexpr double top     = 25.0;
    constexpr double bottom  = 30.0;
    const double height      = panel_h * static_cast<double>(std::max<std::size_t>(1, reports.size()));

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::svg_num(width) << "\" height=\""
      << detail::svg_num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for(std::size_t k = 0; k < reports.size(); ++k)
    {
        const auto& r  = reports[k];
        const double y0 = panel_h * static_cast<double>(k);
        const double plot_w = width - left - right;
        const double plot_h = panel_h - top - bottom;

        double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
        for(std::size_t i = 0; i < r.mu_samples.size(); ++i)
        {
            const double x = std::log10(r.mu_samples[i]);
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, r.subtracted[i]);
            ymax = std::max(ymax, r.subtracted[i]);
        }
        if(xmax == xmin) { xmax = xmin + 1.0; }
        if(ymax - ymin < 1e-9 * std::max(1.0, std::fabs(ymax)))
        {
            const double pad = 0.5 * std::max(1e-6, std::fabs(ymax) * 1e-3);
            ymin -= pad;
            ymax += pad;
        }
        auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
        auto py = [&](double y) { return y0 + top + (ymax - y) / (ymax - ymin) * plot_h; };

        s << "  <g>\n";
        s << "    <text x=\"" << detail::svg_num(left) << "\" y=\"" << detail::svg_num(y0 + 15.0) << "\">n=" << r.qn.n
          << " m=" << r.qn.m << (r.survives ? " (survives)" : r.boundary ? " (boundary)" : " (divergent)")
          << "</text>\n";
        s << "    <line x1=\"" << detail::svg_num(left) << "\" y1=\"" << detail::svg_num(y0 + top + plot_h)
          << "\" x2=\"" << detail::svg_num(left + plot_w) << "\" y2=\"" << detail::svg_num(y0 + top + plot_h)
          << "\" stroke=\"black\"/>\n";
        s << "    <line x1=\"" << detail::svg_num(left) << "\" y1=\"" << detail::svg_num(y0 + top) << "\" x2=\""
          << detail::svg_num(left) << "\" y2=\"" << detail::svg_num(y0 + top + plot_h) << "\" stroke=\"black\"/>\n";
        s << "    <text x=\"" << detail::svg_num(left - 5.0) << "\" y=\"" << detail::svg_num(y0 + top + 4.0)
          << "\" text-anchor=\"end\">" << detail::svg_label(ymax) << "</text>\n";
        s << "    <text x=\"" << detail::svg_num(left - 5.0) << "\" y=\"" << detail::svg_num(y0 + top + plot_h)
          << "\" text-anchor=\"end\">" << detail::svg_label(ymin) << "</text>\n";
        s << "    <text x=\"" << detail::svg_num(left) << "\" y=\"" << detail::svg_num(y0 + top + plot_h + 14.0)
          << "\">log10 mu = " << detail::svg_label(xmin) << "</text>\n";
        s << "    <text x=\"" << detail::svg_num(left + plot_w) << "\" y=\""
          << detail::svg_num(y0 + top + plot_h + 14.0) << "\" text-anchor=\"end\">" << detail::svg_label(xmax)
          << "</text>\n";
        s << "    <polyline fill=\"none\" stroke=\"" << (r.survives ? "steelblue" : "firebrick") << "\" points=\"";
        for(std::size_t i = 0; i < r.mu_samples.size(); ++i)
        {
            s << (i ? " " : "") << detail::svg_num(px(std::log10(r.mu_samples[i]))) << ','
              << detail::svg_num(py(r.subtracted[i]));
        }
        s << "\"/>\n  </g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace hmw

#endif // HMW_REPORT_HPP
