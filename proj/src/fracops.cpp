#include "gjfspec/fracops.hpp"
#include "gjfspec/specfun.hpp"

#include <cmath>

namespace gjfs {

namespace {

// Central finite-difference k-th derivative, second order in h, k <= 4.
double central_diff(const std::function<double(double)>& g, int k, double x, double h)
{
    switch (k) {
    case 0:
        return g(x);
    case 1:
        return (g(x + h) - g(x - h)) / (2.0 * h);
    case 2:
        return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
    case 3:
        return (g(x + 2.0 * h) - 2.0 * g(x + h) + 2.0 * g(x - h) - g(x - 2.0 * h))
               / (2.0 * h * h * h);
    case 4:
        return (g(x + 2.0 * h) - 4.0 * g(x + h) + 6.0 * g(x) - 4.0 * g(x - h) + g(x - 2.0 * h))
               / (h * h * h * h);
    default:
        throw DomainError("central_diff: derivative order above 4 not supported");
    }
}

double stencil_halfwidth(int k, double h)
{
    return (k <= 2 ? 1.0 : 2.0) * h;
}

// 1/Gamma(z), exactly 0 at the poles.
double inv_gamma(double z)
{
    if (is_gamma_pole(z))
        return 0.0;
    const SignedLogValue g = log_gamma(z);
    return g.sign * std::exp(-g.log_abs);
}

} // namespace

FracOrder FracOrder::from(double s)
{
    if (!(s > 0.0))
        throw DomainError("FracOrder: order must be positive");
    const int k = static_cast<int>(std::floor(s)) + 1;
    return {s, k};
}

double frac_integral_quad(const std::function<double(double)>& v, double rho, double x,
                          FracSide side, int M, double endpoint_exponent)
{
    if (!(rho > 0.0))
        throw InadmissibleParam("frac_integral_quad: order must be positive");
    const double sigma = endpoint_exponent;
    if (!(sigma > -1.0))
        throw InadmissibleParam("frac_integral_quad: endpoint exponent must be > -1");

    const double half = (side == FracSide::Right) ? 0.5 * (1.0 - x) : 0.5 * (1.0 + x);
    if (half <= 0.0)
        return 0.0;

    // Right: y = x + (1-x)(1+t)/2 maps the kernel to (1+t)^{rho-1} and the
    // far-endpoint factor to (1-t)^{sigma}; Left is the mirror image.
    const QuadRule rule = (side == FracSide::Right)
                              ? gauss_jacobi_rule({sigma, rho - 1.0}, M)
                              : gauss_jacobi_rule({rho - 1.0, sigma}, M);
    const double pref = std::exp((rho + sigma) * std::log(half) - log_gamma(rho).log_abs);
    double acc = 0.0;
    for (int q = 0; q < M; ++q) {
        const double t = rule.nodes[q];
        double y, far;
        if (side == FracSide::Right) {
            y = x + half * (1.0 + t);
            far = 1.0 - y;
        } else {
            y = -1.0 + half * (1.0 + t);
            far = 1.0 + y;
        }
        double g = v(y);
        if (sigma != 0.0)
            g *= std::exp(-sigma * std::log(far));
        acc += rule.weights[q] * g;
    }
    return pref * acc;
}

ScaledGjf bateman_integral(FracSide side, double rho, const JacobiParam& p, int n)
{
    if (!(rho > 0.0))
        throw InadmissibleParam("bateman_integral: order must be positive");
    if (side == FracSide::Right) {
        if (!(p.alpha > -1.0))
            throw InadmissibleParam("bateman_integral: Right rule needs alpha > -1");
        const double scale = gamma_ratio(n + p.alpha + 1.0, n + p.alpha + rho + 1.0);
        return {{Side::Plus, p.alpha + rho, p.beta - rho, n}, scale};
    }
    if (!(p.beta > -1.0))
        throw InadmissibleParam("bateman_integral: Left rule needs beta > -1");
    const double scale = gamma_ratio(n + p.beta + 1.0, n + p.beta + rho + 1.0);
    return {{Side::Minus, p.alpha - rho, p.beta + rho, n}, scale};
}

double frac_deriv_quad(const std::function<double(double)>& v, const FracOrder& ord, double x,
                       FracSide side, int M, double h, double endpoint_exponent)
{
    const int k = ord.k;
    const double margin = stencil_halfwidth(k, h);
    if (std::abs(x) > 1.0 - margin)
        throw DomainError("frac_deriv_quad: point too close to an endpoint for the stencil");
    auto g = [&](double y) {
        return frac_integral_quad(v, k - ord.s, y, side, M, endpoint_exponent);
    };
    const double dk = central_diff(g, k, x, h);
    return (side == FracSide::Right && k % 2 != 0) ? -dk : dk;
}

double caputo_deriv_quad(const std::function<double(double)>& v, const FracOrder& ord, double x,
                         FracSide side, int M, double h)
{
    const int k = ord.k;
    auto vk = [&](double y) { return central_diff(v, k, y, h); };
    const double integ = frac_integral_quad(vk, k - ord.s, x, side, M);
    return (side == FracSide::Right && k % 2 != 0) ? -integ : integ;
}

double rl_caputo_correction(const std::vector<double>& derivs, const FracOrder& ord, double x,
                            FracSide side)
{
    if (static_cast<int>(derivs.size()) < ord.k)
        throw DomainError("rl_caputo_correction: need v^(j) for j = 0..k-1");
    double acc = 0.0;
    for (int j = 0; j < ord.k; ++j) {
        const double ig = inv_gamma(1.0 + j - ord.s);
        if (ig == 0.0)
            continue;
        double term;
        if (side == FracSide::Left)
            term = derivs[j] * ig * std::exp((j - ord.s) * std::log1p(x));
        else
            term = (j % 2 == 0 ? 1.0 : -1.0) * derivs[j] * ig
                   * std::exp((j - ord.s) * std::log1p(-x));
        acc += term;
    }
    return acc;
}

} // namespace gjfs
