#include "gjfspec/study.hpp"
#include "gjfspec/fracops.hpp"
#include "gjfspec/specfun.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gjfs {

namespace {

using nlohmann::json;

constexpr int kExactQuadSize = 100; // singular-kernel rule size for exact RHS

std::string fmt16(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16g", x);
    return buf;
}

double tgamma_pos(double x)
{
    return std::exp(log_gamma(x).log_abs) * log_gamma(x).sign;
}

// --- exact-solution cases ---------------------------------------------------

// u = (1-x^3)(1 - e^{1-x}), u(1) = u'(1) = 0; the right-hand side of
// D+^s u = f is the fractional integral of order k-s of the analytic k-th
// derivative (the boundary terms distinguishing the derivative conventions
// vanish), evaluated by singular-kernel quadrature.
RhsCase make_fivp_smooth_case(double s)
{
    if (!(s > 0.0) || !(s < 2.0) || std::abs(s - std::round(s)) < 1e-12)
        throw ConfigError("rhs '(1-x^3)*(1-exp(1-x))' needs a non-integer order in (0,2)");
    auto u = [](double x) { return (1.0 - x * x * x) * (1.0 - std::exp(1.0 - x)); };
    auto du = [](double x) {
        const double e = std::exp(1.0 - x);
        return -3.0 * x * x + e * (3.0 * x * x + 1.0 - x * x * x);
    };
    auto ddu = [](double x) {
        const double e = std::exp(1.0 - x);
        return -6.0 * x + e * (6.0 * x - 6.0 * x * x - (1.0 - x * x * x));
    };
    const FracOrder ord = FracOrder::from(s);
    std::function<double(double)> f;
    if (ord.k == 1)
        f = [du, s](double x) {
            return -frac_integral_quad(du, 1.0 - s, x, FracSide::Right, kExactQuadSize);
        };
    else
        f = [ddu, s](double x) {
            return frac_integral_quad(ddu, 2.0 - s, x, FracSide::Right, kExactQuadSize);
        };
    RhsCase c;
    c.f = f;
    c.has_exact = true;
    c.exact = {u, f}; // the energy-norm derivative of u is f itself
    return c;
}

// u = (1-x)^3 - c (1-x)^2 with c = 6/(3+mu), mu = 2-nu: satisfies both
// integral boundary conditions; everything is closed form.
RhsCase make_integral2_poly_case(double nu)
{
    if (!(nu > 1.0) || !(nu < 2.0))
        throw ConfigError("rhs '(1-x)^2*(1-x-6/(3+mu))' needs an order in (1,2)");
    const double mu = 2.0 - nu;
    const double c = 6.0 / (3.0 + mu);
    auto u = [c](double x) {
        const double w = 1.0 - x;
        return w * w * (w - c);
    };
    const double a3 = 6.0 / tgamma_pos(4.0 - nu);
    const double a2 = c * 2.0 / tgamma_pos(3.0 - nu);
    auto f = [a3, a2, nu](double x) {
        // -D+^nu u
        const double w = 1.0 - x;
        return -(a3 * std::pow(w, 3.0 - nu) - a2 * std::pow(w, 2.0 - nu));
    };
    const double b3 = 6.0 / tgamma_pos(3.0 + mu);
    const double b2 = c * 2.0 / tgamma_pos(2.0 + mu);
    auto dfrac = [b3, b2, mu](double x) {
        // D+^{1-mu} u
        const double w = 1.0 - x;
        return b3 * std::pow(w, 2.0 + mu) - b2 * std::pow(w, 1.0 + mu);
    };
    return {f, true, {u, dfrac}};
}

// u = (1-x) sin(pi x), u(+-1) = 0, u'(1) = 0: the right-hand side of
// D+^nu u = f and the energy derivative D+^{nu-1} u both reduce to fractional
// integrals of analytic integer derivatives.
RhsCase make_dirichlet_sine_case(double nu)
{
    if (!(nu > 1.0) || !(nu < 2.0) || std::abs(nu - std::round(nu)) < 1e-12)
        throw ConfigError("rhs '(1-x)*sin(pi*x)' needs a non-integer order in (1,2)");
    const double pi = std::acos(-1.0);
    auto u = [pi](double x) { return (1.0 - x) * std::sin(pi * x); };
    auto du = [pi](double x) {
        return -std::sin(pi * x) + pi * (1.0 - x) * std::cos(pi * x);
    };
    auto ddu = [pi](double x) {
        return -2.0 * pi * std::cos(pi * x) - pi * pi * (1.0 - x) * std::sin(pi * x);
    };
    auto f = [ddu, nu](double x) {
        return frac_integral_quad(ddu, 2.0 - nu, x, FracSide::Right, kExactQuadSize);
    };
    const double s = nu - 1.0;
    auto dfrac = [du, s](double x) {
        return -frac_integral_quad(du, 1.0 - s, x, FracSide::Right, kExactQuadSize);
    };
    return {std::function<double(double)>(f), true, {u, dfrac}};
}

// --- config parsing helpers -------------------------------------------------

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

json toml_scalar(const std::string& raw)
{
    const std::string t = trim(raw);
    if (t.empty())
        throw ConfigError("toml: empty value");
    if (t.front() == '"') {
        if (t.size() < 2 || t.back() != '"')
            throw ConfigError("toml: unterminated string");
        return json(t.substr(1, t.size() - 2));
    }
    if (t == "true")
        return json(true);
    if (t == "false")
        return json(false);
    if (t.find_first_of(".eE") == std::string::npos
        || (t.find_first_of("eE") == std::string::npos && t.find('.') == std::string::npos)) {
        // integer candidates: digits with optional sign
        bool is_int = !t.empty() && t.find_first_not_of("+-0123456789") == std::string::npos;
        if (is_int) {
            try {
                return json(std::stoll(t));
            } catch (...) {
                throw ConfigError("toml: bad integer '" + t + "'");
            }
        }
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size())
            throw ConfigError("toml: bad number '" + t + "'");
        return json(v);
    } catch (const ConfigError&) {
        throw;
    } catch (...) {
        throw ConfigError("toml: bad value '" + t + "'");
    }
}

// Minimal TOML subset: top-level `key = value` lines, strings, numbers,
// booleans, flat arrays, # comments. JSON is the general config path.
json parse_toml_subset(const std::string& text)
{
    json out = json::object();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // strip comments outside strings
        bool in_str = false;
        std::string stripped;
        for (char ch : line) {
            if (ch == '"')
                in_str = !in_str;
            if (ch == '#' && !in_str)
                break;
            stripped.push_back(ch);
        }
        const std::string t = trim(stripped);
        if (t.empty())
            continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("toml: expected 'key = value', got '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("toml: empty key");
        if (!val.empty() && val.front() == '[') {
            if (val.back() != ']')
                throw ConfigError("toml: arrays must be single-line");
            json arr = json::array();
            std::string body = val.substr(1, val.size() - 2);
            std::size_t pos = 0;
            while (pos < body.size()) {
                std::size_t comma = body.find(',', pos);
                const std::string item =
                    body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!trim(item).empty())
                    arr.push_back(toml_scalar(item));
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
            out[key] = arr;
        } else {
            out[key] = toml_scalar(val);
        }
    }
    return out;
}

StudyConfig config_from_json(const json& j)
{
    if (!j.is_object())
        throw ConfigError("config root must be an object");
    StudyConfig cfg;
    try {
        cfg.kind = kind_from_name(j.at("kind").get<std::string>());
        if (j.at("nu").is_array())
            cfg.nus = j.at("nu").get<std::vector<double>>();
        else
            cfg.nus = {j.at("nu").get<double>()};
        cfg.rhs = j.at("rhs").get<std::string>();
        cfg.N_list = j.at("N_list").get<std::vector<int>>();
        if (j.contains("norms")) {
            cfg.norm_l2 = cfg.norm_frac = false;
            for (const auto& n : j.at("norms")) {
                const std::string s = n.get<std::string>();
                if (s == "L2" || s == "l2")
                    cfg.norm_l2 = true;
                else if (s == "FracEnergy" || s == "frac")
                    cfg.norm_frac = true;
                else
                    throw ConfigError("unknown norm '" + s + "'");
            }
        }
        if (j.contains("output"))
            cfg.output = j.at("output").get<std::string>();
        if (j.contains("format")) {
            const std::string f = j.at("format").get<std::string>();
            if (f == "csv")
                cfg.format = StudyConfig::Format::Csv;
            else if (f == "json")
                cfg.format = StudyConfig::Format::Json;
            else
                throw ConfigError("format must be 'csv' or 'json'");
        }
        if (j.contains("quad_extra"))
            cfg.quad_extra = j.at("quad_extra").get<int>();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad config: ") + e.what());
    }
    if (cfg.nus.empty())
        throw ConfigError("nu list is empty");
    if (cfg.N_list.empty())
        throw ConfigError("N_list is empty");
    for (std::size_t i = 1; i < cfg.N_list.size(); ++i)
        if (cfg.N_list[i] <= cfg.N_list[i - 1])
            throw ConfigError("N_list must be strictly increasing");
    if (cfg.quad_extra < 1)
        throw ConfigError("quad_extra must be positive");
    return cfg;
}

} // namespace

const char* kind_name(ProblemKind kind)
{
    switch (kind) {
    case ProblemKind::Fivp:
        return "fivp";
    case ProblemKind::FbvpIntegral2:
        return "fbvp-int2";
    case ProblemKind::FbvpIntegral3:
        return "fbvp-int3";
    case ProblemKind::FbvpDirichlet:
        return "fbvp-dirichlet";
    }
    return "?";
}

ProblemKind kind_from_name(const std::string& s)
{
    if (s == "fivp")
        return ProblemKind::Fivp;
    if (s == "fbvp-int2")
        return ProblemKind::FbvpIntegral2;
    if (s == "fbvp-int3")
        return ProblemKind::FbvpIntegral3;
    if (s == "fbvp-dirichlet")
        return ProblemKind::FbvpDirichlet;
    throw ConfigError("unknown kind '" + s + "'");
}

RhsCase make_rhs_case(const std::string& name, ProblemKind kind, double nu)
{
    if (name == "one")
        return {[](double) { return 1.0; }, false, {}};
    if (name == "1+x+cos(x)")
        return {[](double x) { return 1.0 + x + std::cos(x); }, false, {}};
    if (name == "sin(x)")
        return {[](double x) { return std::sin(x); }, false, {}};
    if (name == "x*exp(x)")
        return {[](double x) { return x * std::exp(x); }, false, {}};
    if (name == "(1-x^3)*(1-exp(1-x))") {
        if (kind != ProblemKind::Fivp)
            throw ConfigError("rhs '" + name + "' is an initial-value-problem exact solution");
        return make_fivp_smooth_case(nu);
    }
    if (name == "(1-x)^2*(1-x-6/(3+mu))") {
        if (kind != ProblemKind::FbvpIntegral2)
            throw ConfigError("rhs '" + name + "' is an integral-BC exact solution");
        return make_integral2_poly_case(nu);
    }
    if (name == "(1-x)*sin(pi*x)") {
        if (kind != ProblemKind::FbvpDirichlet)
            throw ConfigError("rhs '" + name + "' is a Dirichlet exact solution");
        return make_dirichlet_sine_case(nu);
    }
    throw ConfigError("unknown rhs '" + name + "'");
}

StudyConfig parse_config_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("json parse error: ") + e.what());
    }
    return config_from_json(j);
}

StudyConfig parse_config_toml_text(const std::string& text)
{
    return config_from_json(parse_toml_subset(text));
}

StudyConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return parse_config_json_text(text);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0)
        return parse_config_toml_text(text);
    throw ConfigError("config file must end in .json or .toml");
}

std::uint64_t config_hash(const StudyConfig& cfg)
{
    std::string canon = std::string("kind=") + kind_name(cfg.kind) + ";nu=";
    for (double nu : cfg.nus)
        canon += fmt16(nu) + ",";
    canon += ";rhs=" + cfg.rhs + ";N=";
    for (int n : cfg.N_list)
        canon += std::to_string(n) + ",";
    canon += ";norms=";
    if (cfg.norm_l2)
        canon += "l2,";
    if (cfg.norm_frac)
        canon += "frac,";
    canon += std::string(";format=") + (cfg.format == StudyConfig::Format::Csv ? "csv" : "json");
    canon += ";quad_extra=" + std::to_string(cfg.quad_extra);

    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<StudyRow> run_study(const StudyConfig& cfg)
{
    std::vector<StudyRow> rows;
    const int n_max = cfg.N_list.back();
    const int n_ref = 2 * n_max + 32;

    for (double nu : cfg.nus) {
        const RhsCase rc = make_rhs_case(cfg.rhs, cfg.kind, nu);
        SpectralSolution ref{};
        if (!rc.has_exact)
            ref = solve({cfg.kind, nu, n_ref, rc.f, cfg.quad_extra});

        double prev_err = std::numeric_limits<double>::quiet_NaN();
        int prev_n = 0;
        for (int N : cfg.N_list) {
            StudyRow row{nu, N, std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::quiet_NaN()};
            try {
                const SpectralSolution sol = solve({cfg.kind, nu, N, rc.f, cfg.quad_extra});
                if (rc.has_exact) {
                    if (cfg.norm_l2)
                        row.error_l2 = error_norms(sol, rc.exact, ErrorNorm::L2);
                    if (cfg.norm_frac)
                        row.error_frac = error_norms(sol, rc.exact, ErrorNorm::FracEnergy);
                } else {
                    if (cfg.norm_l2)
                        row.error_l2 = error_norms(sol, ref, ErrorNorm::L2);
                    if (cfg.norm_frac)
                        row.error_frac = error_norms(sol, ref, ErrorNorm::FracEnergy);
                }
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw std::runtime_error("study cell (nu=" + fmt16(nu) + ", N="
                                         + std::to_string(N) + "): " + e.what());
            }
            if (prev_n > 0 && row.error_frac > 0.0 && prev_err > 0.0)
                row.rate_frac = std::log(prev_err / row.error_frac)
                                / std::log(double(N) / double(prev_n));
            prev_err = row.error_frac;
            prev_n = N;
            rows.push_back(row);
        }
    }

    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out)
            throw ConfigError("cannot write output file '" + cfg.output + "'");
        out << (cfg.format == StudyConfig::Format::Csv ? format_rows_csv(cfg, rows)
                                                       : format_rows_json(cfg, rows));
    }
    return rows;
}

namespace {

std::string hash_hex(std::uint64_t h)
{
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

std::string format_rows_csv(const StudyConfig& cfg, const std::vector<StudyRow>& rows)
{
    std::string out = std::string("# gjfspec ") + kVersion + " config " + hash_hex(config_hash(cfg)) + "\n";
    out += "kind,nu,N,error_l2,error_frac,rate_frac\n";
    for (const StudyRow& r : rows) {
        out += std::string(kind_name(cfg.kind)) + "," + fmt16(r.nu) + "," + std::to_string(r.N)
               + "," + (std::isnan(r.error_l2) ? "" : fmt16(r.error_l2)) + ","
               + (std::isnan(r.error_frac) ? "" : fmt16(r.error_frac)) + ","
               + (std::isnan(r.rate_frac) ? "" : fmt16(r.rate_frac)) + "\n";
    }
    return out;
}

std::string format_rows_json(const StudyConfig& cfg, const std::vector<StudyRow>& rows)
{
    json j;
    j["library"] = std::string("gjfspec ") + kVersion;
    j["config_hash"] = hash_hex(config_hash(cfg));
    j["kind"] = kind_name(cfg.kind);
    j["rows"] = json::array();
    for (const StudyRow& r : rows) {
        json row;
        row["nu"] = r.nu;
        row["N"] = r.N;
        row["error_l2"] = std::isnan(r.error_l2) ? json(nullptr) : json(r.error_l2);
        row["error_frac"] = std::isnan(r.error_frac) ? json(nullptr) : json(r.error_frac);
        row["rate_frac"] = std::isnan(r.rate_frac) ? json(nullptr) : json(r.rate_frac);
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

namespace {

// Least-squares slope of log e vs log N over points [lo, hi).
double window_slope(const std::vector<std::pair<int, double>>& pts, std::size_t lo, std::size_t hi)
{
    const std::size_t m = hi - lo;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double x = std::log(double(pts[i].first));
        const double y = std::log(pts[i].second);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = m * sxx - sx * sx;
    if (std::abs(den) < 1e-14)
        throw DegenerateFit("estimate_rate: collinear abscissae");
    return (m * sxy - sx * sy) / den;
}

void check_fit_points(const std::vector<std::pair<int, double>>& pts)
{
    if (pts.size() < 3)
        throw DegenerateFit("estimate_rate: need at least 3 points");
    for (const auto& [n, e] : pts) {
        if (n <= 0)
            throw DegenerateFit("estimate_rate: N must be positive");
        if (!(e > 0.0))
            throw DegenerateFit("estimate_rate: errors must be positive");
    }
}

} // namespace

double estimate_rate(const std::vector<std::pair<int, double>>& points)
{
    check_fit_points(points);
    const std::size_t half = (points.size() + 1) / 2;
    const std::size_t lo = points.size() - half;
    return -window_slope(points, lo, points.size());
}

bool super_algebraic(const std::vector<std::pair<int, double>>& points)
{
    check_fit_points(points);
    const std::size_t half = (points.size() + 1) / 2;
    const double head = -window_slope(points, 0, half);
    const double tail = -window_slope(points, points.size() - half, points.size());
    return tail > 1.5 * head;
}

} // namespace gjfs
