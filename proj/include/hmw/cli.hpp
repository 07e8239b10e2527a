#ifndef HMW_CLI_HPP
#define HMW_CLI_HPP

#include "hmw/analytic.hpp"
#include "hmw/limit_study.hpp"
#include "hmw/noncommutative.hpp"
#include "hmw/parallel.hpp"
#include "hmw/params.hpp"
#include "hmw/params_io.hpp"
#include "hmw/radial_oracle.hpp"
#include "hmw/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hmw {

// Exit codes: 0 all checks pass, 1 tolerance breach or numerical failure,
// 2 usage or configuration error.

struct RunConfig
{
    std::string command;
    std::optional<std::string> params_file;
    std::string preset = "natural";
    std::optional<double> mu, d, lambda, rho, K, hbar, c, flux;
    std::optional<std::string> out_dir;
    std::string format = "csv";
    int n_max = 2;
    int m_min = -2;
    int m_max = 2;
    int grid_points = 4000;
    std::optional<double> r_max;
    int truncation = 200;
    double mu_start = 0.01;
    double mu_factor = 0.1;
    int steps = 5;
    std::optional<double> tol;
    std::string branch = "exact";
};

namespace detail {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

inline PhysicalParams resolve_params(const RunConfig& cfg)
{
    PhysicalParams p;
    if(cfg.params_file)
    {
        p = load_params(*cfg.params_file);
    }
    else if(cfg.preset == "oscillator")
    {
        p = presets::oscillator();
    }
    else
    {
        p = presets::natural();
    }
    if(cfg.mu) { p.mu = *cfg.mu; }
    if(cfg.d) { p.d = *cfg.d; }
    if(cfg.lambda) { p.lambda = *cfg.lambda; }
    if(cfg.rho) { p.rho = *cfg.rho; }
    if(cfg.K) { p.K = *cfg.K; }
    if(cfg.hbar) { p.hbar = *cfg.hbar; }
    if(cfg.c) { p.c = *cfg.c; }
    if(cfg.flux)
    {
        if(cfg.lambda)
        {
            throw UsageError("--flux and --lambda are mutually exclusive");
        }
        if(p.d == 0.0)
        {
            throw ParameterError("--flux needs d != 0");
        }
        p.lambda = 2.0 * std::numbers::pi * p.hbar * p.c * p.c * *cfg.flux / p.d;
    }
    return p;
}

inline void check_ranges(const RunConfig& cfg)
{
    if(cfg.n_max < 0)
    {
        throw UsageError("--n-max must be non-negative");
    }
    if(cfg.m_min > cfg.m_max)
    {
        throw UsageError("empty m range: --m-min " + std::to_string(cfg.m_min) + " > --m-max " +
                         std::to_string(cfg.m_max));
    }
    if(cfg.tol && !(*cfg.tol > 0.0))
    {
        throw UsageError("--tol must be positive");
    }
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if(!f)
    {
        throw UsageError("cannot write '" + path.string() + "'");
    }
    f << text;
}

inline std::filesystem::path out_dir(const RunConfig& cfg)
{
    std::filesystem::path dir(*cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if(ec)
    {
        throw UsageError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    return dir;
}

inline std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out)
{
    if(cfg.format == "svg")
    {
        throw UsageError("spectrum supports --format csv or json");
    }
    const PhysicalParams p = resolve_params(cfg);
    const auto rows        = spectrum_table(cfg.n_max, cfg.m_min, cfg.m_max, p);
    if(cfg.out_dir)
    {
        const auto dir = out_dir(cfg);
        write_file(dir / "spectrum.csv", spectrum_csv(rows));
        write_file(dir / "spectrum.json", dump(spectrum_json(rows)));
    }
    out << (cfg.format == "json" ? dump(spectrum_json(rows)) : spectrum_csv(rows));
    return 0;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out)
{
    if(cfg.format == "svg")
    {
        throw UsageError("oracle supports --format csv or json");
    }
    const PhysicalParams p = resolve_params(cfg);
    validate(p, Requirement::full);
    require_confinement(p);
    if(cfg.grid_points < 16)
    {
        throw UsageError("--grid-points must be at least 16");
    }
    const int levels = cfg.n_max + 1;
    const auto count = static_cast<std::size_t>(cfg.m_max - cfg.m_min + 1);

    auto reports = parallel_map<AdjudicationReport>(count, [&](std::size_t i) {
        const int m = cfg.m_min + static_cast<int>(i);
        OracleOptions opt;
        GridSpec grid = default_grid(m, p, levels);
        grid.n_points = cfg.grid_points;
        if(cfg.r_max)
        {
            grid.r_max = *cfg.r_max;
        }
        opt.grid = grid;
        return adjudicate(m, p, levels, opt, cfg.tol);
    });

    ordered_json channels = ordered_json::array();
    bool breach           = false;
    for(const auto& rep : reports)
    {
        channels.push_back(oracle_json(rep));
        const bool paper = rep.any_paper_flagged();
        const bool exact = rep.any_exact_flagged();
        if(cfg.branch == "exact") { breach = breach || exact; }
        else if(cfg.branch == "paper") { breach = breach || paper; }
        else { breach = breach || exact || paper; }
    }
    const ordered_json doc = {{"params", to_json(p)}, {"branch", cfg.branch}, {"channels", channels}};
    if(cfg.out_dir)
    {
        write_file(out_dir(cfg) / "oracle.json", dump(doc));
    }
    out << dump(doc);
    return breach ? 1 : 0;
}

inline int cmd_reduced(const RunConfig& cfg, std::ostream& out)
{
    const PhysicalParams p = resolve_params(cfg);
    if(cfg.truncation < 8)
    {
        throw UsageError("--truncation must be at least 8");
    }
    if(p.d * p.rho == 0.0)
    {
        throw ParameterError("reduced model undefined for d*rho == 0");
    }
    const auto n    = static_cast<std::size_t>(cfg.truncation);
    const int k     = cfg.n_max + 1;
    if(static_cast<std::size_t>(k) > n / 4)
    {
        throw UsageError("--n-max too large for truncation " + std::to_string(n));
    }
    const ReducedReport rep = make_reduced_report(p, n, k);
    const double tol        = cfg.tol.value_or(1e-8);
    const bool breach = rep.max_energy_error() > tol || rep.max_angular_error() > tol ||
                        rep.residuals.generator > tol || rep.residuals.conservation > tol;
    const std::string text = dump(reduced_json(rep));
    if(cfg.out_dir)
    {
        write_file(out_dir(cfg) / "reduced.json", text);
    }
    out << text;
    return breach ? 1 : 0;
}

inline int cmd_limit(const RunConfig& cfg, std::ostream& out)
{
    const PhysicalParams p = resolve_params(cfg);
    validate(p, Requirement::reduced);
    const MuSchedule schedule{cfg.mu_start, cfg.mu_factor, cfg.steps};
    const int width  = cfg.m_max - cfg.m_min + 1;
    const auto count = static_cast<std::size_t>((cfg.n_max + 1) * width);

    auto reports = parallel_map<LimitReport>(count, [&](std::size_t i) {
        const int n = static_cast<int>(i) / width;
        const int m = cfg.m_min + static_cast<int>(i) % width;
        return sweep_mu({n, m}, p, schedule);
    });

    const double tol = cfg.tol.value_or(1e-6);
    bool breach      = false;
    for(const auto& r : reports)
    {
        if(r.survives && (!r.limit_value || std::fabs(*r.limit_value - r.regularized) > tol))
        {
            breach = true;
        }
    }

    if(cfg.out_dir)
    {
        const auto dir = out_dir(cfg);
        write_file(dir / "limit.json", dump(limit_json(reports)));
        for(const auto& r : reports)
        {
            write_file(dir / ("limit_n" + std::to_string(r.qn.n) + "_m" + std::to_string(r.qn.m) + ".csv"),
                       limit_csv(r));
        }
        write_file(dir / "limit.svg", limit_svg(reports));
    }
    if(cfg.format == "json") { out << dump(limit_json(reports)); }
    else if(cfg.format == "svg") { out << limit_svg(reports); }
    else { out << limit_table_csv(reports); }
    return breach ? 1 : 0;
}

inline void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--params", cfg.params_file, "JSON parameter file (mu, d, lambda, rho, K, hbar, c)");
    sub->add_option("--preset", cfg.preset, "base parameters when no file is given")
        ->check(CLI::IsMember({"natural", "oscillator"}));
    sub->add_option("--mu", cfg.mu, "dipole mass");
    sub->add_option("--d", cfg.d, "dipole moment");
    sub->add_option("--lambda", cfg.lambda, "line-field strength");
    sub->add_option("--rho", cfg.rho, "uniform-field strength");
    sub->add_option("--K", cfg.K, "trap constant");
    sub->add_option("--hbar", cfg.hbar, "reduced Planck constant");
    sub->add_option("--c", cfg.c, "speed of light");
    sub->add_option("--flux", cfg.flux, "flux parameter a; sets lambda");
    sub->add_option("--out", cfg.out_dir, "write report files into this directory");
    sub->add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--n-max", cfg.n_max, "largest radial quantum number");
    sub->add_option("--m-min", cfg.m_min, "smallest angular quantum number");
    sub->add_option("--m-max", cfg.m_max, "largest angular quantum number");
    sub->add_option("--grid-points", cfg.grid_points, "coarse radial grid size");
    sub->add_option("--r-max", cfg.r_max, "radial box size");
    sub->add_option("--truncation", cfg.truncation, "Fock truncation N");
    sub->add_option("--mu-start", cfg.mu_start, "first mass in the sweep");
    sub->add_option("--mu-factor", cfg.mu_factor, "mass ratio between sweep steps");
    sub->add_option("--steps", cfg.steps, "number of sweep steps");
    sub->add_option("--tol", cfg.tol, "absolute tolerance");
    sub->add_option("--branch", cfg.branch, "closed form checked by the oracle")
        ->check(CLI::IsMember({"paper", "exact", "both"}));
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectra of a trapped planar dipole in crossed magnetic fields", "hmw-spectra"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    const std::vector<std::pair<const char*, const char*>> commands = {
        {"spectrum", "closed-form spectrum table"},
        {"oracle", "numerical radial eigenvalues against both closed forms"},
        {"reduced", "massless model on the noncommutative plane"},
        {"limit", "mu -> 0 sweep with the universal subtraction"},
    };
    for(const auto& [name, help] : commands)
    {
        auto* sub = app.add_subcommand(name, help);
        detail::add_common(sub, cfg);
        sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch(const CLI::CallForHelp&)
    {
        out << app.help();
        return 0;
    }
    catch(const CLI::ParseError& e)
    {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try
    {
        detail::check_ranges(cfg);
        if(cfg.command == "spectrum") { return detail::cmd_spectrum(cfg, out); }
        if(cfg.command == "oracle") { return detail::cmd_oracle(cfg, out); }
        if(cfg.command == "reduced") { return detail::cmd_reduced(cfg, out); }
        return detail::cmd_limit(cfg, out);
    }
    catch(const detail::UsageError& e)
    {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch(const ParameterError& e)
    {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    }
    catch(const NumericalError& e)
    {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hmw

#endif // HMW_CLI_HPP
