#include "gjfspec/study.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

std::string fmt16(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16g", x);
    return buf;
}

int run_study_cmd(const std::string& config_path)
{
    const gjfs::StudyConfig cfg = gjfs::load_config(config_path);
    const std::vector<gjfs::StudyRow> rows = gjfs::run_study(cfg);
    std::cout << (cfg.format == gjfs::StudyConfig::Format::Csv
                      ? gjfs::format_rows_csv(cfg, rows)
                      : gjfs::format_rows_json(cfg, rows));
    return 0;
}

int run_solve_cmd(const std::string& kind, double nu, int N, const std::string& rhs,
                  const std::string& out_path, const std::string& format, int quad_extra)
{
    const gjfs::ProblemKind pk = gjfs::kind_from_name(kind);
    const gjfs::RhsCase rc = gjfs::make_rhs_case(rhs, pk, nu);
    const gjfs::SpectralSolution sol = gjfs::solve({pk, nu, N, rc.f, quad_extra});

    std::string text;
    if (format == "csv") {
        text = std::string("# gjfspec ") + gjfs::kVersion + " " + kind + " nu=" + fmt16(nu)
               + " N=" + std::to_string(N) + " rhs=" + rhs + "\n";
        text += "n,coefficient\n";
        for (std::size_t i = 0; i < sol.coeffs.coeffs.size(); ++i)
            text += std::to_string(sol.coeffs.start + static_cast<int>(i)) + ","
                    + fmt16(sol.coeffs.coeffs[i]) + "\n";
    } else if (format == "json") {
        nlohmann::json j;
        j["library"] = std::string("gjfspec ") + gjfs::kVersion;
        j["kind"] = kind;
        j["nu"] = nu;
        j["N"] = N;
        j["rhs"] = rhs;
        j["start"] = sol.coeffs.start;
        j["coefficients"] = sol.coeffs.coeffs;
        text = j.dump(2) + "\n";
    } else {
        throw gjfs::ConfigError("format must be 'csv' or 'json'");
    }

    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw gjfs::ConfigError("cannot write output file '" + out_path + "'");
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Jacobi function spectral solvers"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* study = app.add_subcommand("study", "Run a convergence study from a config file");
    study->add_option("--config", config_path, "Path to a .json or .toml study config")
        ->required();

    std::string kind, rhs, out_path, format = "csv";
    double nu = 0.0;
    int N = 0, quad_extra = 16;
    CLI::App* solve = app.add_subcommand("solve", "Solve a single problem instance");
    solve->add_option("--kind", kind, "fivp|fbvp-int2|fbvp-int3|fbvp-dirichlet")->required();
    solve->add_option("--nu", nu, "Fractional order")->required();
    solve->add_option("--N", N, "Truncation degree")->required();
    solve->add_option("--rhs", rhs, "Right-hand side registry name")->required();
    solve->add_option("--out", out_path, "Output file (default: stdout)");
    solve->add_option("--format", format, "csv|json (default csv)");
    solve->add_option("--quad-extra", quad_extra, "Quadrature size surplus M - N (default 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (study->parsed())
            return run_study_cmd(config_path);
        return run_solve_cmd(kind, nu, N, rhs, out_path, format, quad_extra);
    } catch (const gjfs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
