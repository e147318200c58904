#include "kink/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kink/analysis.hpp"
#include "kink/errors.hpp"
#include "kink/io.hpp"
#include "kink/iteration.hpp"

namespace kink::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_index_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const double v = io::parse_double(item);
        if (v < 0.0 || v != std::floor(v)) {
            throw UsageError("snapshot indices must be nonnegative integers, got '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

// Flags shared by the solver-driving subcommands. Precedence is
// flag > config file > built-in default.
struct SolverOptions {
    SolverConfig parsed;
    std::string snapshots;
    std::string config_path;
    std::string out_dir = "out";
    CLI::Option* snapshots_option = nullptr;
    std::vector<std::pair<CLI::Option*, std::function<void(SolverConfig&)>>> overrides;

    void attach(CLI::App* sub, bool single_a)
    {
        auto bind = [&](CLI::Option* opt, std::function<void(SolverConfig&)> set) {
            overrides.emplace_back(opt, std::move(set));
        };
        if (single_a) {
            bind(sub->add_option("--a", parsed.a, "nonlocality parameter in (0, 1]"),
                 [this](SolverConfig& c) { c.a = parsed.a; });
        }
        bind(sub->add_option("--t-max", parsed.t_max, "truncation point of the half-line"),
             [this](SolverConfig& c) { c.t_max = parsed.t_max; });
        bind(sub->add_option("--n", parsed.n_points, "grid points on [0, t_max]"),
             [this](SolverConfig& c) { c.n_points = parsed.n_points; });
        bind(sub->add_option("--max-iter", parsed.max_iterations, "iteration cap"),
             [this](SolverConfig& c) { c.max_iterations = parsed.max_iterations; });
        bind(sub->add_option("--step-tol", parsed.step_tolerance, "sup-norm step tolerance"),
             [this](SolverConfig& c) { c.step_tolerance = parsed.step_tolerance; });
        bind(sub->add_option("--res-tol", parsed.residual_tolerance, "sup-norm residual tolerance"),
             [this](SolverConfig& c) { c.residual_tolerance = parsed.residual_tolerance; });
        snapshots_option = sub->add_option("--snapshots", snapshots,
                                           "comma-separated iterate indices to record");
        bind(snapshots_option,
             [this](SolverConfig& c) { c.record_iterates = parse_index_list(snapshots); });
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--config", config_path, "JSON file with solver settings");
    }

    SolverConfig resolve() const
    {
        SolverConfig cfg;
        bool explicit_snapshots = false;
        if (!config_path.empty()) {
            explicit_snapshots = apply_config_file(cfg, config_path);
        }
        for (const auto& [opt, set] : overrides) {
            if (opt->count() > 0) {
                set(cfg);
            }
        }
        explicit_snapshots = explicit_snapshots || snapshots_option->count() > 0;
        if (!explicit_snapshots) {
            // The built-in snapshot set is trimmed to the run length; an
            // explicit list is validated as given.
            std::erase_if(cfg.record_iterates,
                          [&](std::size_t k) { return k > cfg.max_iterations; });
        }
        return cfg;
    }

    // Returns whether the file set the snapshot list.
    static bool apply_config_file(SolverConfig& cfg, const std::string& path)
    {
        bool snapshots_set = false;
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot open config file " + path);
        }
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw UsageError("config file " + path + ": " + e.what());
        }
        if (!j.is_object()) {
            throw UsageError("config file " + path + " must hold a JSON object");
        }
        try {
            for (const auto& [key, value] : j.items()) {
                if (key == "a") {
                    cfg.a = value.get<double>();
                } else if (key == "t_max") {
                    cfg.t_max = value.get<double>();
                } else if (key == "n") {
                    cfg.n_points = value.get<std::size_t>();
                } else if (key == "max_iter") {
                    cfg.max_iterations = value.get<std::size_t>();
                } else if (key == "step_tol") {
                    cfg.step_tolerance = value.get<double>();
                } else if (key == "res_tol") {
                    cfg.residual_tolerance = value.get<double>();
                } else if (key == "tail_value") {
                    cfg.tail_value = value.get<double>();
                } else if (key == "snapshots") {
                    cfg.record_iterates = value.get<std::vector<std::size_t>>();
                    snapshots_set = true;
                } else {
                    throw UsageError("config file " + path + ": unknown key '" + key + "'");
                }
            }
        } catch (const json::exception& e) {
            throw UsageError("config file " + path + ": " + e.what());
        }
        return snapshots_set;
    }
};

void warn_on_coarse_grid(const SolverConfig& cfg, std::ostream& err)
{
    const double h = cfg.grid().spacing();
    if (h > recommended_spacing(cfg.a)) {
        err << "warning: spacing " << h << " exceeds sqrt(a)/4 = " << recommended_spacing(cfg.a)
            << " for a = " << cfg.a << "\n";
    }
    if (cfg.t_max < recommended_t_max(cfg.a)) {
        err << "warning: t_max " << cfg.t_max << " is below 10 + 6 sqrt(a) = "
            << recommended_t_max(cfg.a) << "\n";
    }
}

json config_json(const SolverConfig& c)
{
    return json{{"a", c.a},
                {"t_max", c.t_max},
                {"n", c.n_points},
                {"max_iter", c.max_iterations},
                {"step_tol", c.step_tolerance},
                {"res_tol", c.residual_tolerance},
                {"tail_value", c.tail_value},
                {"snapshots", c.record_iterates},
                {"stop_on_convergence", c.stop_on_convergence}};
}

json properties_json(const PropertyReport& report)
{
    json arr = json::array();
    for (const auto& e : report.entries()) {
        arr.push_back({{"name", e.name},
                       {"pass", e.pass},
                       {"margin", e.margin},
                       {"location", e.location},
                       {"tolerance", e.tolerance}});
    }
    return arr;
}

json report_json(const SolutionProfile& sol, const PropertyReport& props)
{
    json iterations = json::array();
    for (std::size_t n = 0; n < sol.report.records.size(); ++n) {
        const auto& r = sol.report.records[n];
        iterations.push_back({{"n", n + 1},
                              {"sup_step", r.sup_step},
                              {"residual", r.residual},
                              {"min_monotonicity_margin", r.min_monotonicity_margin},
                              {"max_value", r.max_value},
                              {"min_slope", r.min_slope}});
    }
    json j{{"a", sol.a},
           {"converged", sol.report.converged},
           {"iterations_run", sol.report.iterations_run},
           {"iterations", iterations},
           {"properties", properties_json(props)},
           {"all_pass", props.all_pass()}};
    const auto rate = sol.report.observed_contraction();
    j["observed_contraction"] = rate ? json(*rate) : json(nullptr);
    return j;
}

void write_json(const fs::path& path, const json& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << j.dump(2) << '\n';
}

json manifest_json(const std::string& command, const SolverConfig& cfg,
                   const std::vector<fs::path>& artifacts, Clock::time_point start,
                   std::size_t passed, std::size_t total)
{
    json paths = json::array();
    for (const auto& p : artifacts) {
        paths.push_back(p.generic_string());
    }
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"config", config_json(cfg)},
                {"artifacts", paths},
                {"wall_clock_seconds", elapsed.count()},
                {"properties", {{"passed", passed}, {"total", total}}}};
}

void write_solution_csv(const fs::path& path, const FullLineFunction& profile)
{
    const std::vector<std::string> header{"t", "phi"};
    const std::vector<std::vector<double>> cols{
        profile.grid().nodes(), std::vector<double>(profile.values().begin(), profile.values().end())};
    io::write_csv(path, header, cols);
}

void write_snapshot_csv(const fs::path& path, const IterationReport& report, const Grid& grid)
{
    std::vector<std::string> header{"t"};
    std::vector<std::vector<double>> cols{grid.nodes()};
    for (const auto& [k, f] : report.snapshots) {
        header.push_back("phi" + std::to_string(k));
        cols.emplace_back(f.values().begin(), f.values().end());
    }
    io::write_csv(path, header, cols);
}

int exit_code_for(const SolutionProfile& sol, const PropertyReport& props)
{
    if (!sol.report.converged) {
        return kNotConverged;
    }
    return props.all_pass() ? kSuccess : kPropertyFailure;
}

int cmd_solve(const SolverOptions& opts, std::ostream& out, std::ostream& err)
{
    const SolverConfig cfg = opts.resolve();
    cfg.validate();
    warn_on_coarse_grid(cfg, err);
    const auto start = Clock::now();

    const SolutionProfile sol = solve(cfg);
    const PropertyReport props = run_property_suite(sol, cfg);

    const fs::path dir(opts.out_dir);
    fs::create_directories(dir);
    const std::vector<fs::path> artifacts{dir / "solution.csv", dir / "snapshots.csv",
                                          dir / "report.json", dir / "manifest.json"};
    write_solution_csv(artifacts[0], sol.full_line);
    write_snapshot_csv(artifacts[1], sol.report, sol.half_line.grid());
    write_json(artifacts[2], report_json(sol, props));
    write_json(artifacts[3], manifest_json("solve", cfg, artifacts, start, props.passed(),
                                           props.entries().size()));

    out << "a=" << cfg.a << " iterations=" << sol.report.iterations_run
        << " converged=" << (sol.report.converged ? "yes" : "no") << " checks=" << props.passed()
        << "/" << props.entries().size() << "\n";
    return exit_code_for(sol, props);
}

int cmd_figure1(const SolverOptions& opts, std::ostream& out, std::ostream& err)
{
    SolverConfig cfg = opts.resolve();
    cfg.stop_on_convergence = false;
    cfg.validate();
    if (cfg.record_iterates.size() < 2) {
        throw UsageError("figure1 needs at least two snapshot indices");
    }
    warn_on_coarse_grid(cfg, err);
    const auto start = Clock::now();

    const SolutionProfile sol = solve(cfg);
    PropertyReport props = run_property_suite(sol, cfg);

    const Grid grid = sol.half_line.grid();
    std::vector<HalfLineFunction> curves;
    std::vector<std::string> header{"t"};
    std::vector<std::vector<double>> cols{grid.nodes()};
    for (const auto& [k, f] : sol.report.snapshots) {
        curves.push_back(f);
        header.push_back("phi" + std::to_string(k));
        cols.emplace_back(f.values().begin(), f.values().end());
    }

    // Difference between the two highest recorded iterates.
    const HalfLineFunction& last = curves[curves.size() - 1];
    const HalfLineFunction& before = curves[curves.size() - 2];
    std::vector<double> diff(grid.size());
    double max_diff = 0.0;
    double min_diff = 0.0;
    std::size_t min_at = 0;
    for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = last[k] - before[k];
        max_diff = std::max(max_diff, diff[k]);
        if (diff[k] < min_diff) {
            min_diff = diff[k];
            min_at = k;
        }
    }

    CheckResult ordering = check_iterate_monotonicity(curves);
    ordering.name = "figure_ordering";
    props.add(ordering);
    props.add(make_check("figure_difference_nonnegative", min_diff, min_at, 1e-10));

    const fs::path dir(opts.out_dir);
    fs::create_directories(dir);
    const std::vector<fs::path> artifacts{dir / "figure1a.csv", dir / "figure1b.csv",
                                          dir / "report.json", dir / "manifest.json"};
    io::write_csv(artifacts[0], header, cols);
    const std::vector<std::string> diff_header{"t", "diff"};
    const std::vector<std::vector<double>> diff_cols{grid.nodes(), diff};
    io::write_csv(artifacts[1], diff_header, diff_cols);
    write_json(artifacts[2], report_json(sol, props));
    json manifest = manifest_json("figure1", cfg, artifacts, start, props.passed(),
                                  props.entries().size());
    manifest["max_difference"] = max_diff;
    manifest["difference_of"] = {sol.report.snapshots.rbegin()->first,
                                 std::next(sol.report.snapshots.rbegin())->first};
    write_json(artifacts[3], manifest);

    out << "curves=" << curves.size() << " max_difference=" << io::format_double(max_diff)
        << " checks=" << props.passed() << "/" << props.entries().size() << "\n";
    return exit_code_for(sol, props);
}

struct SweepRow {
    double a;
    bool converged;
    std::size_t iterations;
    double final_step;
    double final_residual;
    std::size_t passed;
    std::size_t total;
    bool pass;
};

SweepRow run_sweep_member(SolverConfig cfg, const fs::path& dir)
{
    const SolutionProfile sol = solve(cfg);
    const PropertyReport props = run_property_suite(sol, cfg);
    fs::create_directories(dir);
    write_solution_csv(dir / "solution.csv", sol.full_line);
    write_json(dir / "report.json", report_json(sol, props));

    const auto& records = sol.report.records;
    return SweepRow{cfg.a,
                    sol.report.converged,
                    sol.report.iterations_run,
                    records.empty() ? 0.0 : records.back().sup_step,
                    records.empty() ? 0.0 : records.back().residual,
                    props.passed(),
                    props.entries().size(),
                    sol.report.converged && props.all_pass()};
}

int cmd_sweep(const SolverOptions& opts, std::vector<double> a_values, std::ostream& out,
              std::ostream& err)
{
    if (a_values.empty()) {
        throw UsageError("sweep needs at least one value of --a");
    }
    std::vector<double> unique;
    for (double a : a_values) {
        if (std::find(unique.begin(), unique.end(), a) != unique.end()) {
            err << "warning: duplicate a = " << a << " ignored\n";
            continue;
        }
        unique.push_back(a);
    }

    const SolverConfig base = opts.resolve();
    std::vector<SolverConfig> configs;
    for (double a : unique) {
        SolverConfig cfg = base;
        cfg.a = a;
        cfg.validate();
        warn_on_coarse_grid(cfg, err);
        configs.push_back(cfg);
    }
    const auto start = Clock::now();
    const fs::path dir(opts.out_dir);

    std::vector<std::future<SweepRow>> jobs;
    for (const auto& cfg : configs) {
        jobs.push_back(std::async(std::launch::async, run_sweep_member, cfg,
                                  dir / ("a_" + io::format_short(cfg.a))));
    }
    std::vector<SweepRow> rows;
    for (auto& j : jobs) {
        rows.push_back(j.get());
    }

    std::vector<std::vector<double>> cols(8);
    std::size_t rows_passed = 0;
    for (const auto& r : rows) {
        cols[0].push_back(r.a);
        cols[1].push_back(r.converged ? 1.0 : 0.0);
        cols[2].push_back(static_cast<double>(r.iterations));
        cols[3].push_back(r.final_step);
        cols[4].push_back(r.final_residual);
        cols[5].push_back(static_cast<double>(r.passed));
        cols[6].push_back(static_cast<double>(r.total));
        cols[7].push_back(r.pass ? 1.0 : 0.0);
        rows_passed += r.pass ? 1 : 0;
        out << "a=" << r.a << " iterations=" << r.iterations
            << " residual=" << io::format_double(r.final_residual) << " checks=" << r.passed << "/"
            << r.total << (r.pass ? " PASS" : " FAIL") << "\n";
    }
    const std::vector<std::string> header{"a",           "converged",    "iterations",
                                          "final_step",  "final_residual", "checks_passed",
                                          "checks_total", "pass"};
    fs::create_directories(dir);
    std::vector<fs::path> artifacts{dir / "sweep.csv"};
    for (const auto& cfg : configs) {
        const fs::path sub = dir / ("a_" + io::format_short(cfg.a));
        artifacts.push_back(sub / "solution.csv");
        artifacts.push_back(sub / "report.json");
    }
    artifacts.push_back(dir / "manifest.json");
    io::write_csv(artifacts.front(), header, cols);

    json manifest = manifest_json("sweep", base, artifacts, start, rows_passed, rows.size());
    manifest["a_values"] = unique;
    write_json(artifacts.back(), manifest);
    return rows_passed == rows.size() ? kSuccess : kPropertyFailure;
}

FullLineFunction load_profile(const std::string& path)
{
    const io::CsvTable table = io::read_csv(path);
    const auto& t = table.column("t");
    const auto& phi = table.column("phi");
    const std::size_t n = t.size();
    if (n < 5 || n % 2 == 0) {
        throw std::runtime_error("profile must hold an odd number (>= 5) of samples");
    }
    const double t_max = t.back();
    const SymmetricGrid grid(Grid(t_max, (n + 1) / 2));
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(t[k] - grid.node(k)) > 1e-9 * std::max(1.0, t_max)) {
            throw std::runtime_error("profile is not sampled on a uniform grid symmetric about 0");
        }
    }
    return FullLineFunction(grid, phi);
}

int cmd_check(const std::string& input, double a, double residual_tolerance, std::ostream& out)
{
    FullLineFunction profile = [&] {
        try {
            return load_profile(input);
        } catch (const DomainError& e) {
            throw UsageError(std::string("malformed profile: ") + e.what());
        } catch (const std::runtime_error& e) {
            throw UsageError(std::string("malformed profile: ") + e.what());
        }
    }();
    const PropertyReport report = check_stored_profile(profile, a, residual_tolerance);
    out << json{{"a", a},
                {"input", input},
                {"properties", properties_json(report)},
                {"all_pass", report.all_pass()}}
               .dump(2)
        << "\n";
    return report.all_pass() ? kSuccess : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monotone iteration for odd kink solutions of a*Phi^3 + (1-a)*Phi = C_a[Phi]",
                 "kinksolve"};
    app.require_subcommand(1);

    SolverOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "run the iteration and write the solution");
    solve_opts.attach(solve_cmd, true);

    SolverOptions figure_opts;
    auto* figure_cmd = app.add_subcommand("figure1", "write the iterate family and late-iterate difference");
    figure_opts.attach(figure_cmd, true);

    SolverOptions sweep_opts;
    std::vector<double> sweep_a;
    auto* sweep_cmd = app.add_subcommand("sweep", "solve for several values of a");
    sweep_opts.attach(sweep_cmd, false);
    sweep_cmd->add_option("--a", sweep_a, "comma-separated values of a")->delimiter(',');

    std::string check_input;
    double check_a = 1.0;
    double check_res_tol = SolverConfig{}.residual_tolerance;
    auto* check_cmd = app.add_subcommand("check", "run the property suite on a stored profile");
    check_cmd->add_option("--input", check_input, "CSV with columns t, phi on a symmetric grid")
        ->required();
    check_cmd->add_option("--a", check_a, "nonlocality parameter in (0, 1]");
    check_cmd->add_option("--res-tol", check_res_tol, "allowed equation residual");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(solve_opts, out, err);
        }
        if (figure_cmd->parsed()) {
            return cmd_figure1(figure_opts, out, err);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep_opts, sweep_a, out, err);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check_input, check_a, check_res_tol, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace kink::cli
