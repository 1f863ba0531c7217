#ifndef GJFSPEC_FRACOPS_HPP
#define GJFSPEC_FRACOPS_HPP

#include "gjfspec/gjf.hpp"

#include <functional>

namespace gjfs {

// Which endpoint the operator integrates from: Left integrates over (-1, x),
// Right over (x, 1).
enum class FracSide { Left, Right };

// Fractional order s in [k-1, k).
struct FracOrder {
    double s;
    int k;

    static FracOrder from(double s);
};

// Quadrature evaluation of the fractional integral of order rho > 0:
//   Left : (1/Gamma(rho)) Int_{-1}^{x} (x-y)^{rho-1} v(y) dy
//   Right: (1/Gamma(rho)) Int_{x}^{1}  (y-x)^{rho-1} v(y) dy
// The kernel singularity is absorbed exactly into an M-point Gauss-Jacobi
// rule. If v is known to carry a factor (1-y)^sigma (Right) or (1+y)^sigma
// (Left) at the far endpoint, pass endpoint_exponent = sigma and that factor
// is absorbed as well, making the rule exact for polynomial remainders.
double frac_integral_quad(const std::function<double(double)>& v, double rho, double x,
                          FracSide side, int M, double endpoint_exponent = 0.0);

// Closed-form fractional integral of a weighted Jacobi polynomial:
//   Right: I+^rho {(1-x)^a P_n^{(a,b)}} = [G(n+a+1)/G(n+a+rho+1)] (1-x)^{a+rho} P_n^{(a+rho, b-rho)}
//   Left : I-^rho {(1+x)^b P_n^{(a,b)}} = [G(n+b+1)/G(n+b+rho+1)] (1+x)^{b+rho} P_n^{(a-rho, b+rho)}
// `side` selects which rule (Right needs p.alpha > -1, Left needs p.beta > -1).
ScaledGjf bateman_integral(FracSide side, double rho, const JacobiParam& p, int n);

// Brute-force Riemann-Liouville derivative: finite differences (central,
// second order, step h) of the fractional integral of order k - s. For
// cross-validation only; accuracy is O(h^2) plus quadrature error.
double frac_deriv_quad(const std::function<double(double)>& v, const FracOrder& ord, double x,
                       FracSide side, int M, double h, double endpoint_exponent = 0.0);

// Brute-force Caputo derivative: fractional integral of order k - s of the
// k-th finite-difference derivative of v (with the right-side (-1)^k sign).
double caputo_deriv_quad(const std::function<double(double)>& v, const FracOrder& ord, double x,
                         FracSide side, int M, double h);

// Sum of the boundary terms that relate the Riemann-Liouville and Caputo
// derivatives. derivs[j] supplies v^(j) at -1 (Left) or +1 (Right),
// j = 0..k-1. Terms whose 1/Gamma factor sits on a pole vanish exactly.
double rl_caputo_correction(const std::vector<double>& derivs, const FracOrder& ord, double x,
                            FracSide side);

} // namespace gjfs

#endif
