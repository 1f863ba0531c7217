#include "gjfspec/gjf.hpp"
#include "gjfspec/fracops.hpp"
#include "gjfspec/specfun.hpp"

#include <cmath>
#include <numbers>

namespace gjfs {

namespace {

constexpr double kIntTol = 1e-12;

double snap_integer(double x)
{
    const double r = std::round(x);
    return std::abs(x - r) < kIntTol ? r : x;
}

// (1 -+ x)^e with exact endpoint handling; e is the prefactor exponent.
double prefactor(Side side, double e, double x)
{
    e = snap_integer(e);
    if (e == 0.0)
        return 1.0;
    const double base = (side == Side::Plus) ? 1.0 - x : 1.0 + x;
    if (base <= 0.0) {
        if (base == 0.0 && e > 0.0)
            return 0.0;
        throw DomainError("gjf_eval: singular prefactor at endpoint");
    }
    return std::exp(e * std::log(base));
}

int integer_or_zero(double x)
{
    const double r = std::round(x);
    return std::abs(x - r) < kIntTol ? static_cast<int>(r) : 0;
}

} // namespace

void check_gjf_admissible(const GjfLabel& label)
{
    const double e = (label.side == Side::Plus) ? label.alpha : label.beta;
    if (e <= -1.0)
        throw InadmissibleParam("gjf: prefactor exponent must be > -1");
    if (label.n < 0)
        throw DomainError("gjf: negative degree");
    check_jacobi_admissible({label.alpha, label.beta}, label.n);
}

double gjf_eval(const GjfLabel& label, double x)
{
    check_gjf_admissible(label);
    const double e = (label.side == Side::Plus) ? label.alpha : label.beta;
    const double pre = prefactor(label.side, e, x);
    if (pre == 0.0)
        return 0.0;
    return pre * jacobi_eval({label.alpha, label.beta}, label.n, x)[label.n];
}

std::vector<double> gjf_eval_batch(Side side, double alpha, double beta, int N, double x)
{
    check_gjf_admissible({side, alpha, beta, N});
    const double e = (side == Side::Plus) ? alpha : beta;
    const double pre = prefactor(side, e, x);
    if (pre == 0.0)
        return std::vector<double>(N + 1, 0.0);
    std::vector<double> out = jacobi_eval({alpha, beta}, N, x);
    for (double& v : out)
        v *= pre;
    return out;
}

ScaledGjf gjf_rl_deriv(const GjfLabel& label, double s)
{
    if (s <= 0.0)
        throw DomainError("gjf_rl_deriv: order must be positive");
    check_gjf_admissible(label);
    const double a = label.alpha, b = label.beta;
    if (label.side == Side::Plus) {
        if (!(a > s - 1.0))
            throw InadmissibleParam("gjf_rl_deriv: requires alpha > s - 1 on the Plus side");
        const double scale = gamma_ratio(label.n + a + 1.0, label.n + a - s + 1.0);
        return {{Side::Plus, snap_integer(a - s), snap_integer(b + s), label.n}, scale};
    }
    if (!(b > s - 1.0))
        throw InadmissibleParam("gjf_rl_deriv: requires beta > s - 1 on the Minus side");
    const double scale = gamma_ratio(label.n + b + 1.0, label.n + b - s + 1.0);
    return {{Side::Minus, snap_integer(a + s), snap_integer(b - s), label.n}, scale};
}

ScaledGjf gjf_caputo_deriv(const GjfLabel& label, double s, int k)
{
    if (k < 1 || !(s >= k - 1.0) || !(s < k))
        throw DomainError("gjf_caputo_deriv: requires s in [k-1, k)");
    const double e = (label.side == Side::Plus) ? label.alpha : label.beta;
    if (!(e > k - 1.0))
        throw InadmissibleParam("gjf_caputo_deriv: prefactor exponent must exceed k - 1");
    return gjf_rl_deriv(label, s);
}

double gjf_sl_eigenvalue(double alpha, double beta, double s, int n)
{
    if (!(alpha > s - 1.0) || !(beta > -1.0))
        throw InadmissibleParam("gjf_sl_eigenvalue: requires alpha > s - 1 and beta > -1");
    return gamma_ratio(n + alpha + 1.0, n + alpha - s + 1.0)
           * gamma_ratio(n + beta + s + 1.0, n + beta + 1.0);
}

double gjf_norm_gamma(double alpha, double beta, int n)
{
    if (beta > -1.0)
        return jacobi_norm_gamma({alpha, beta}, n);
    const int k = -integer_or_zero(beta);
    if (k < 1)
        throw InadmissibleParam("gjf_norm_gamma: beta must be > -1 or a negative integer");
    if (n < k)
        throw DomainError("gjf_norm_gamma: degree below start index of constrained family");
    const double d = jacobi_negint_factorize(k, alpha, n);
    return std::exp2(-2.0 * k) * d * d * jacobi_norm_gamma({alpha, double(k)}, n - k);
}

double gjf_deriv_norm_h(double alpha, double beta, int n, int l)
{
    if (!(alpha > 0.0) || !(alpha + beta > -1.0))
        throw InadmissibleParam("gjf_deriv_norm_h: requires alpha > 0 and alpha + beta > -1");
    if (l < 0 || n < l)
        throw DomainError("gjf_deriv_norm_h: requires 0 <= l <= n");
    const double ab = alpha + beta;
    const double log_abs = (ab + 1.0) * std::numbers::ln2
                           + 2.0 * log_gamma(n + alpha + 1.0).log_abs
                           + log_gamma(n + ab + l + 1.0).log_abs
                           - std::log(2.0 * n + ab + 1.0)
                           - log_gamma(n + 1.0).log_abs
                           - log_gamma(n - l + 1.0).log_abs
                           - log_gamma(n + ab + 1.0).log_abs;
    return std::exp(log_abs);
}

double gjf_case3_norm_mu(double apb, int n, int m)
{
    if (!(apb > -1.0))
        throw InadmissibleParam("gjf_case3_norm_mu: requires alpha + beta > -1");
    if (m < 0 || n < m)
        throw DomainError("gjf_case3_norm_mu: requires 0 <= m <= n");
    const double log_abs = (apb + 1.0) * std::numbers::ln2
                           + log_gamma(n + 1.0).log_abs
                           + log_gamma(n + apb + m + 1.0).log_abs
                           - std::log(2.0 * n + apb + 1.0)
                           - log_gamma(n - m + 1.0).log_abs
                           - log_gamma(n + apb + 1.0).log_abs;
    return std::exp(log_abs);
}

CoeffVector gjf_project(const std::function<double(double)>& f, Side side, double alpha,
                        double beta, int N, const std::function<double(double)>& dfrac,
                        int quad_extra)
{
    if (!(alpha > 0.0) || !(alpha + beta > -1.0))
        throw InadmissibleParam("gjf_project: requires alpha > 0 and alpha + beta > -1");
    if (N < 0)
        throw DomainError("gjf_project: negative truncation");

    if (side == Side::Minus) {
        auto g = [&f](double x) { return f(-x); };
        std::function<double(double)> dg;
        if (dfrac)
            dg = [&dfrac](double x) { return dfrac(-x); };
        CoeffVector plus = gjf_project(g, Side::Plus, alpha, beta, N, dg, quad_extra);
        CoeffVector out{{Side::Minus, beta, alpha, 0}, plus.start, plus.coeffs};
        for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
            const int n = out.start + static_cast<int>(i);
            if (n % 2 != 0)
                out.coeffs[i] = -out.coeffs[i];
        }
        return out;
    }

    const int M = N + quad_extra;
    const int k = -integer_or_zero(beta);

    if (beta > -1.0) {
        // Direct weighted inner products. Absorbing the basis prefactor into
        // the quadrature weight leaves f(x) * (1-x)^{-alpha} * P_n against
        // the (alpha, beta) weight, exact whenever f lives in the family.
        const QuadRule rule = gauss_jacobi_rule({alpha, beta}, M);
        std::vector<double> acc(N + 1, 0.0);
        for (int q = 0; q < M; ++q) {
            const double x = rule.nodes[q];
            const double g = rule.weights[q] * f(x) * std::exp(-alpha * std::log1p(-x));
            const std::vector<double> pv = jacobi_eval({alpha, beta}, N, x);
            for (int n = 0; n <= N; ++n)
                acc[n] += g * pv[n];
        }
        CoeffVector out{{Side::Plus, alpha, beta, 0}, 0, std::vector<double>(N + 1)};
        for (int n = 0; n <= N; ++n)
            out.coeffs[n] = acc[n] / jacobi_norm_gamma({alpha, beta}, n);
        return out;
    }

    if (k >= 1) {
        // Boundary-constrained family: P_n^{(alpha,-k)} carries an exact
        // ((1+x)/2)^k factor, so the inner products reduce to the (alpha, k)
        // weight against P_{n-k}^{(alpha,k)}.
        if (N < k)
            throw DomainError("gjf_project: truncation below start index of constrained family");
        const QuadRule rule = gauss_jacobi_rule({alpha, double(k)}, M);
        std::vector<double> acc(N - k + 1, 0.0);
        for (int q = 0; q < M; ++q) {
            const double x = rule.nodes[q];
            const double g = rule.weights[q] * f(x)
                             * std::exp(-alpha * std::log1p(-x) - k * std::log1p(x));
            const std::vector<double> pv = jacobi_eval({alpha, double(k)}, N - k, x);
            for (int n = k; n <= N; ++n)
                acc[n - k] += g * pv[n - k];
        }
        CoeffVector out{{Side::Plus, alpha, double(-k), 0}, k, std::vector<double>(N - k + 1)};
        for (int n = k; n <= N; ++n) {
            const double d = jacobi_negint_factorize(k, alpha, n);
            out.coeffs[n - k] = std::exp2(k) * acc[n - k]
                                / (d * jacobi_norm_gamma({alpha, double(k)}, n - k));
        }
        return out;
    }

    if (!(beta > -alpha - 1.0))
        throw InadmissibleParam("gjf_project: beta outside the admissible projection range");

    // Non-integer beta < -1: expand the fractional derivative of f in
    // P_n^{(0, alpha+beta)} and rescale.
    std::function<double(double)> g = dfrac;
    if (!g) {
        const FracOrder ord = FracOrder::from(alpha);
        g = [f, ord](double x) { return frac_deriv_quad(f, ord, x, FracSide::Right, 96, 1e-4); };
    }
    const double apb = alpha + beta;
    const QuadRule rule = gauss_jacobi_rule({0.0, apb}, M);
    std::vector<double> acc(N + 1, 0.0);
    for (int q = 0; q < M; ++q) {
        const double x = rule.nodes[q];
        const double gv = rule.weights[q] * g(x);
        const std::vector<double> pv = jacobi_eval({0.0, apb}, N, x);
        for (int n = 0; n <= N; ++n)
            acc[n] += gv * pv[n];
    }
    CoeffVector out{{Side::Plus, alpha, beta, 0}, 0, std::vector<double>(N + 1)};
    for (int n = 0; n <= N; ++n) {
        const double vhat = acc[n] / jacobi_norm_gamma({0.0, apb}, n);
        out.coeffs[n] = gamma_ratio(n + 1.0, n + alpha + 1.0) * vhat;
    }
    return out;
}

double gjf_coeff_norms(const CoeffVector& c, double alpha, double beta, int l)
{
    const GjfLabel& fam = c.family;
    const bool match = (fam.side == Side::Plus && std::abs(fam.alpha - alpha) < kIntTol
                        && std::abs(fam.beta - beta) < kIntTol)
                       || (fam.side == Side::Minus && std::abs(fam.beta - alpha) < kIntTol
                           && std::abs(fam.alpha - beta) < kIntTol);
    if (!match)
        throw FamilyMismatch("gjf_coeff_norms: coefficient family disagrees with (alpha, beta)");

    double acc = 0.0;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
        const int n = c.start + static_cast<int>(i);
        const double u = c.coeffs[i];
        if (u == 0.0)
            continue;
        if (l == -1)
            acc += gjf_norm_gamma(alpha, beta, n) * u * u;
        else if (n >= l)
            acc += gjf_deriv_norm_h(alpha, beta, n, l) * u * u;
    }
    return std::sqrt(acc);
}

} // namespace gjfs
