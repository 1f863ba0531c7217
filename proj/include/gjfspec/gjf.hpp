#ifndef GJFSPEC_GJF_HPP
#define GJFSPEC_GJF_HPP

#include "gjfspec/jacobi.hpp"

#include <functional>
#include <vector>

namespace gjfs {

enum class Side { Plus, Minus };

// One generalized Jacobi function. (alpha, beta) are the parameters of the
// underlying Jacobi polynomial P_n^{(alpha,beta)}:
//   Plus:  (1-x)^alpha * P_n^{(alpha,beta)}(x),  alpha > -1
//   Minus: (1+x)^beta  * P_n^{(alpha,beta)}(x),  beta  > -1
struct GjfLabel {
    Side side;
    double alpha;
    double beta;
    int n;
};

// Spectral coefficients c[start..N] against the basis family obtained from
// `family` by letting the degree run; len(coeffs) = N - start + 1.
struct CoeffVector {
    GjfLabel family; // degree field unused
    int start;
    std::vector<double> coeffs;

    int truncation() const { return start + static_cast<int>(coeffs.size()) - 1; }
};

// Image of a fractional-calculus operator in closed form: scale * basis
// function.
struct ScaledGjf {
    GjfLabel label;
    double scale;
};

void check_gjf_admissible(const GjfLabel& label);

// Value at x. x = 1 (Plus) / x = -1 (Minus) allowed when the prefactor
// exponent is >= 0; a positive exponent gives an exact 0.
double gjf_eval(const GjfLabel& label, double x);

// Degrees 0..N at x, sharing one recurrence pass and one prefactor.
std::vector<double> gjf_eval_batch(Side side, double alpha, double beta, int N, double x);

// Closed-form Riemann-Liouville derivative of order s > 0:
//   Plus:  D+^s -> [Gamma(n+a+1)/Gamma(n+a-s+1)] * Plus(a-s, b+s), needs a > s-1
//   Minus: D-^s -> [Gamma(n+b+1)/Gamma(n+b-s+1)] * Minus(a+s, b-s), needs b > s-1
// Prefactor exponents within 1e-12 of an integer are snapped so images that
// are genuinely polynomial evaluate exactly at the endpoints.
ScaledGjf gjf_rl_deriv(const GjfLabel& label, double s);

// Caputo derivative of order s in [k-1, k): same image and scale as the
// Riemann-Liouville derivative, valid under the stricter range alpha > k-1
// (Plus) resp. beta > k-1 (Minus).
ScaledGjf gjf_caputo_deriv(const GjfLabel& label, double s, int k);

// Eigenvalue of the fractional Sturm-Liouville operator
// w^(a,-b) D-^s { w^(-a+s, b+s) D+^s (.) } on Plus(a, b; n).
double gjf_sl_eigenvalue(double alpha, double beta, double s, int n);

// Orthogonality constant of the Plus family: squared weighted-L2 norm of
// Plus(alpha, beta; n) under the weight (1-x)^{-alpha} (1+x)^{beta}.
// Supports beta > -1 and negative-integer beta = -k (boundary-constrained
// families, n >= k).
double gjf_norm_gamma(double alpha, double beta, int n);

// Squared weighted norm of D+^{alpha+l} Plus(alpha, beta; n) under
// (1-x)^l (1+x)^{alpha+beta+l}; requires alpha > 0, alpha + beta > -1, n >= l.
double gjf_deriv_norm_h(double alpha, double beta, int n, int l);

// Squared norm constant for the derivative-expansion route: coefficient of
// |v_n|^2 in ||u||^2 when D+^alpha u = sum v_n P_n^{(0,alpha+beta)} and m
// derivatives are taken.
double gjf_case3_norm_mu(double alpha_plus_beta, int n, int m);

// Orthogonal projection onto span{Plus/Minus GJFs of degree <= N}. Requires
// alpha > 0 and alpha + beta > -1 (prefactor exponent role: alpha for Plus,
// swap roles for Minus). Dispatch on beta:
//   beta > -1          : direct weighted inner products;
//   beta = -k integer  : boundary-constrained family, start index k;
//   beta in (-alpha-1,-1), non-integer: expansion of the fractional
//       derivative of f; supply it via dfrac (preferred) or leave empty to
//       have it computed by the singular-kernel quadrature oracle.
CoeffVector gjf_project(const std::function<double(double)>& f, Side side, double alpha,
                        double beta, int N,
                        const std::function<double(double)>& dfrac = nullptr,
                        int quad_extra = 16);

// Coefficient-space norms of the function represented by c:
//   l == -1: weighted L2 norm (gamma-weighted sum);
//   l >=  0: norm of D+^{alpha+l} of the function (h-weighted sum).
double gjf_coeff_norms(const CoeffVector& c, double alpha, double beta, int l);

} // namespace gjfs

#endif
