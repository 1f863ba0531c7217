#include "gjfspec/jacobi.hpp"
#include "gjfspec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gjfs {

namespace {

constexpr double kIntTol = 1e-12;
constexpr double kDenomTol = 1e-10;

bool is_negative_integer(double x)
{
    const double r = std::round(x);
    return r <= -1.0 && std::abs(x - r) < kIntTol;
}

// Value and derivative of P_M^{(alpha,beta)} at x, for Newton iteration.
void jacobi_value_deriv(const JacobiParam& p, int M, double x, double& val, double& der)
{
    const std::vector<double> v = jacobi_eval(p, M, x);
    val = v[M];
    if (M == 0) {
        der = 0.0;
        return;
    }
    const std::vector<double> d = jacobi_eval({p.alpha + 1.0, p.beta + 1.0}, M - 1, x);
    der = 0.5 * (M + p.alpha + p.beta + 1.0) * d[M - 1];
}

} // namespace

void check_jacobi_admissible(const JacobiParam& p, int n_max)
{
    const double ab = p.alpha + p.beta;
    for (int n = 1; n <= n_max; ++n) {
        if (is_negative_integer(n + ab))
            throw InadmissibleParam("jacobi: n + alpha + beta is a negative integer; degree degenerates");
    }
    for (int n = 1; n < n_max; ++n) {
        if (std::abs(2.0 * n + ab) < kDenomTol || std::abs(n + ab + 1.0) < kDenomTol)
            throw InadmissibleParam("jacobi: recurrence denominator vanishes for this (alpha,beta)");
    }
}

std::vector<double> jacobi_eval(const JacobiParam& p, int n_max, double x)
{
    if (n_max < 0)
        throw DomainError("jacobi_eval: negative degree");
    check_jacobi_admissible(p, n_max);
    const double a = p.alpha, b = p.beta, ab = a + b;

    std::vector<double> out(n_max + 1);
    out[0] = 1.0;
    if (n_max == 0)
        return out;
    out[1] = 0.5 * (ab + 2.0) * x + 0.5 * (a - b);
    for (int n = 1; n < n_max; ++n) {
        const double t = 2.0 * n + ab;
        const double den = 2.0 * (n + 1.0) * (n + ab + 1.0);
        const double an = (t + 1.0) * (t + 2.0) / den;
        const double bn = (b * b - a * a) * (t + 1.0) / (den * t);
        const double cn = 2.0 * (n + a) * (n + b) * (t + 2.0) / (den * t);
        out[n + 1] = (an * x - bn) * out[n] - cn * out[n - 1];
    }
    return out;
}

double jacobi_norm_gamma(const JacobiParam& p, int n)
{
    if (p.alpha <= -1.0 || p.beta <= -1.0)
        throw InadmissibleParam("jacobi_norm_gamma: requires alpha, beta > -1");
    if (n < 0)
        throw DomainError("jacobi_norm_gamma: negative degree");
    const double a = p.alpha, b = p.beta;
    // 2n + a + b + 1 and n + a + b + 1 are positive except possibly for n = 0,
    // where both stay in (-1, ...) only through gamma; handle signs explicitly.
    const SignedLogValue g1 = log_gamma(n + a + 1.0);
    const SignedLogValue g2 = log_gamma(n + b + 1.0);
    const SignedLogValue g3 = log_gamma(n + a + b + 1.0);
    const SignedLogValue gn = log_gamma(n + 1.0);
    const double lead = 2.0 * n + a + b + 1.0;
    const double log_abs = (a + b + 1.0) * std::numbers::ln2 + g1.log_abs + g2.log_abs
                           - std::log(std::abs(lead)) - gn.log_abs - g3.log_abs;
    const int sign = g1.sign * g2.sign * g3.sign * (lead > 0 ? 1 : -1);
    return sign * std::exp(log_abs);
}

double jacobi_deriv_coeff(const JacobiParam& p, int n, int l)
{
    if (l < 0 || l > n)
        throw DomainError("jacobi_deriv_coeff: requires 0 <= l <= n");
    if (l == 0)
        return 1.0;
    return gamma_ratio(n + p.alpha + p.beta + l + 1.0, n + p.alpha + p.beta + 1.0) / std::exp2(l);
}

double jacobi_negint_factorize(int l, double beta, int n)
{
    if (l < 1 || n < l)
        throw DomainError("jacobi_negint_factorize: requires n >= l >= 1");
    return gamma_ratio(n - l + 1.0, n + 1.0) * pochhammer(beta + n - l + 1.0, l);
}

QuadRule gauss_jacobi_rule(const JacobiParam& p, int M)
{
    if (p.alpha <= -1.0 || p.beta <= -1.0)
        throw InadmissibleParam("gauss_jacobi_rule: requires alpha, beta > -1");
    if (M < 1)
        throw DomainError("gauss_jacobi_rule: requires M >= 1");
    const double a = p.alpha, b = p.beta;
    constexpr double tol = 1e-14;
    constexpr int max_iter = 100;

    QuadRule rule{a, b, std::vector<double>(M), std::vector<double>(M)};

    // Interior asymptotic angles of the Jacobi polynomial zeros as starting
    // points; k = 1 corresponds to the root nearest x = 1. Newton steps are
    // deflated against the roots already found so that a poor initial guess
    // cannot converge to a previously located zero.
    for (int k = 1; k <= M; ++k) {
        const double theta = std::numbers::pi * (k - 0.25 + 0.5 * a) / (M + 0.5 * (a + b + 1.0));
        double x = std::cos(theta);
        double val = 0.0, der = 0.0;
        bool converged = false;
        for (int it = 0; it < max_iter; ++it) {
            jacobi_value_deriv(p, M, x, val, der);
            double defl = der / val;
            for (int j = 1; j < k; ++j)
                defl -= 1.0 / (x - rule.nodes[M - j]);
            const double dx = 1.0 / defl;
            x -= dx;
            if (x <= -1.0)
                x = -1.0 + 1e-14;
            if (x >= 1.0)
                x = 1.0 - 1e-14;
            if (std::abs(dx) < tol) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw ConvergenceError("gauss_jacobi_rule: Newton iteration did not converge");
        rule.nodes[M - k] = x;
    }
    if (!std::is_sorted(rule.nodes.begin(), rule.nodes.end())
        || std::adjacent_find(rule.nodes.begin(), rule.nodes.end()) != rule.nodes.end())
        throw ConvergenceError("gauss_jacobi_rule: node set is not strictly increasing");

    // w_k = C / ((1 - x_k^2) P_M'(x_k)^2), with C assembled in log space.
    const double logC = (a + b + 1.0) * std::numbers::ln2
                        + log_gamma(M + a + 1.0).log_abs + log_gamma(M + b + 1.0).log_abs
                        - log_gamma(M + 1.0).log_abs - log_gamma(M + a + b + 1.0).log_abs;
    for (int k = 0; k < M; ++k) {
        const double x = rule.nodes[k];
        double val = 0.0, der = 0.0;
        jacobi_value_deriv(p, M, x, val, der);
        rule.weights[k] = std::exp(logC - std::log1p(-x * x) - 2.0 * std::log(std::abs(der)));
    }
    return rule;
}

} // namespace gjfs
