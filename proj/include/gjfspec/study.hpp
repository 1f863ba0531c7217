#ifndef GJFSPEC_STUDY_HPP
#define GJFSPEC_STUDY_HPP

#include "gjfspec/solvers.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gjfs {

inline constexpr const char* kVersion = "0.1.0";

// A convergence study: one solver kind, one or more orders, a sweep over N.
struct StudyConfig {
    ProblemKind kind;
    std::vector<double> nus;
    std::string rhs;          // registry name
    std::vector<int> N_list;  // strictly increasing
    bool norm_l2 = true;
    bool norm_frac = true;
    std::string output;       // empty: no file written
    enum class Format { Csv, Json } format = Format::Csv;
    int quad_extra = 16;
};

// One cell of the (nu, N) grid. Errors not requested come back as NaN;
// rate_frac is NaN on the first row of each sweep.
struct StudyRow {
    double nu;
    int N;
    double error_l2;
    double error_frac;
    double rate_frac;
};

// A right-hand side resolved from the registry for a concrete (kind, nu).
// When the registry entry carries a closed-form solution, errors are taken
// against it; otherwise against the same scheme at N_ref = 2*max(N) + 32.
struct RhsCase {
    std::function<double(double)> f;
    bool has_exact = false;
    ExactRef exact;
};

// Registry names: "one", "1+x+cos(x)", "sin(x)", "x*exp(x)" are plain
// right-hand sides usable with any kind; "(1-x^3)*(1-exp(1-x))" (initial
// value problems), "(1-x)^2*(1-x-6/(3+mu))" (integral-BC, order in (1,2)),
// and "(1-x)*sin(pi*x)" (Dirichlet, order in (1,2)) name exact solutions
// whose right-hand sides are produced analytically or by singular-kernel
// quadrature of analytic integer derivatives. Unknown names or invalid
// (name, kind, nu) combinations throw ConfigError.
RhsCase make_rhs_case(const std::string& name, ProblemKind kind, double nu);

const char* kind_name(ProblemKind kind);          // "fivp", "fbvp-int2", ...
ProblemKind kind_from_name(const std::string& s); // ConfigError on unknown

// Parse a config file; dispatch on extension (.json or .toml).
StudyConfig load_config(const std::string& path);
StudyConfig parse_config_json_text(const std::string& text);
StudyConfig parse_config_toml_text(const std::string& text);

// FNV-1a over a canonical rendering of the config; stable across runs.
std::uint64_t config_hash(const StudyConfig& cfg);

// Run the sweep; rows ordered by (nu, N). Writes cfg.output (if set) in the
// declared format with a header naming the library version and config hash.
std::vector<StudyRow> run_study(const StudyConfig& cfg);

std::string format_rows_csv(const StudyConfig& cfg, const std::vector<StudyRow>& rows);
std::string format_rows_json(const StudyConfig& cfg, const std::vector<StudyRow>& rows);

// Least-squares slope of log e against log N over the last ceil(half) of the
// points, returned as the positive algebraic rate r in e ~ N^{-r}.
// DegenerateFit when fewer than 3 points or any e <= 0.
double estimate_rate(const std::vector<std::pair<int, double>>& points);

// True when the tail-half slope exceeds 1.5x the head-half slope, the
// signature of faster-than-algebraic decay.
bool super_algebraic(const std::vector<std::pair<int, double>>& points);

} // namespace gjfs

#endif
